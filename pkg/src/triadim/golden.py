"""Embedded classification fixtures: full triple lists for r <= 5, counts for r <= 15.

The fixture files were transcribed once from the published tables and
are treated as read-only ground truth; sha256 digests guard against
accidental edits.  Format: one triple per line, `a b c` with `oo` for an
unbounded order, `#` comments; counts.tsv has columns r, compact,
noncompact.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .core import INFINITY, Order, parse_order

_CHECKSUMS = {
    "r1.txt": "cfdf5b1dc5744cb43b66e2165c69754b353357853dbc0fbbe9497a4a9a783bb7",
    "r2.txt": "fc45c953c14c18ab1f1a700861e432f3945780adf9580a4f63466eb95ca0ba2b",
    "r3.txt": "e707a8fef8c28c88b5375a6d90176999f92038599dd702889f8c5167b3c16896",
    "r4.txt": "da9bca95ffdc10d6adab9c69358e7e8301c76e8fd956ef52899ca6a879500495",
    "r5.txt": "79bb8c3fa262adbe11d67d36968b372f32057f6130bf5ce05d8262ebe0237008",
    "counts.tsv": "e760710b189540b1d2f46104d2499d2361887d5fd35ea8e33d69e67a1fdf3b5e",
}

GOLDEN_LIST_MAX_R = 5
GOLDEN_COUNT_MAX_R = 15


@dataclass
class GoldenSet:
    r: int
    compact_triples: list
    noncompact_triples: list
    counts: Optional[tuple] = None  # (compact_count, noncompact_count)


def _read_embedded(name: str) -> str:
    data = resources.files("triadim").joinpath("golden").joinpath(name).read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != _CHECKSUMS[name]:
        raise RuntimeError(
            f"golden fixture {name} fails its checksum; the embedded "
            "classification data must not be edited"
        )
    return data.decode()


def parse_triple_lines(text: str) -> list:
    triples = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ValueError(f"bad fixture line: {line!r}")
        triples.append(tuple(parse_order(tok) for tok in toks))
    return triples


def load_golden(r: int, path: Optional[str] = None) -> GoldenSet:
    """Golden set for r: full lists for r <= 5 (or from an explicit file),
    counts only for 6 <= r <= 15."""
    counts = load_counts().get(r)
    if path is not None:
        text = Path(path).read_text()
    elif 1 <= r <= GOLDEN_LIST_MAX_R:
        text = _read_embedded(f"r{r}.txt")
    elif r <= GOLDEN_COUNT_MAX_R:
        return GoldenSet(r, [], [], counts)
    else:
        raise ValueError(f"no golden data for r={r}")
    triples = parse_triple_lines(text)
    compact = [t for t in triples if INFINITY not in t]
    noncompact = [t for t in triples if INFINITY in t]
    return GoldenSet(r, compact, noncompact, counts)


def load_counts() -> dict:
    """Known (compact, noncompact) cardinalities keyed by r."""
    out = {}
    for line in _read_embedded("counts.tsv").splitlines()[1:]:
        r, comp, non = line.split("\t")
        out[int(r)] = (int(comp), int(non))
    return out
