"""Result record shared by the enumeration and the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Triple

DIRECT_SCAN = "direct-scan"
DIVISOR_FILTER = "divisor-filter"
NONCOMPACT_LOOP = "noncompact-loop"


@dataclass(frozen=True)
class TripleRecord:
    triple: Triple
    adim: int
    compact: bool
    found_via: str

    def key(self) -> tuple:
        return self.triple.sort_key()
