"""Order of the Galois stabilizer of a triangle (the class multiplicity).

Each isometry class of conjugate triangles is hit by exactly #H scan
units, where H is the subgroup fixing the triangle data.  The brute
count (exhaustive congruence scan) is the authoritative value used by
the dimension and enumeration code.  The closed forms are kept as a
documented fast path and a differential-testing target: they are stated
in terms of pairwise gcds and 2-adic valuations, and they are known to
drift from the scan in degenerate corners:

  * an entry equal to 2 makes the +-1 (mod 2) congruence vacuous, so the
    sign-choice count behind the closed #H1 doubles it (the final #H
    usually survives by cancellation, but e.g. (2, 4, oo) does not);
  * in the one-infinite-entry case the closed criterion is read as
    choosing between #H1 and #H1/2.

Disagreements are reported, never silently resolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .core import Triple, is_infinite, ord2
from .scan import scan_triple

CLOSED_CHECK_LIMIT = 10**6

BRUTE_FORCE = "brute-force"
CLOSED_FORM = "closed-form"


@dataclass
class MultiplicityReport:
    h: int
    h1: int
    h2: int
    t: int  # coprime pairs among the finite entries
    u: int  # pairs of finite entries with gcd <= 2
    method: str
    agreement: Optional[bool] = None
    closed_h: Optional[int] = None


def _pair_stats(tr: Triple) -> tuple:
    fin = tr.finite_entries
    t = u = 0
    for x, y in combinations(fin, 2):
        g = math.gcd(x, y)
        if g == 1:
            t += 1
        if g <= 2:
            u += 1
    return t, u


def multiplicity_brute(tr: Triple) -> MultiplicityReport:
    """#H, #H1, #H2 by exhaustive congruence scan of the units mod 2m."""
    counts = scan_triple(tr, need_curvature=False, need_h=True)
    t, u = _pair_stats(tr)
    return MultiplicityReport(
        h=counts.h, h1=counts.h1, h2=counts.h2, t=t, u=u, method=BRUTE_FORCE
    )


def _closed_finite(a: int, b: int, c: int, t: int, u: int) -> tuple:
    h2 = max(2, 2**t)
    if a % 2 == 1 and b % 2 == 1 and c % 2 == 1:
        h1 = max(2, 2**u)
        return h1, h1, h2
    h1 = 2 * max(2, 2**u)
    full = False
    for x, y, z in permutations((a, b, c)):
        if u <= 1 and ord2(x) == ord2(y) > ord2(z):
            full = True
            break
        if u == 2 and math.gcd(x, y) == 1 == math.gcd(x, z) and ord2(y) == ord2(z) > 0:
            full = True
            break
    return (h1 if full else h1 // 2), h1, h2


def _closed_infinite(fin: tuple) -> tuple:
    e = 3 - len(fin)
    if e == 3:
        return 1, 1, 1
    if e == 2:
        return 2, 2, 2
    a, b = fin
    g = math.gcd(a, b)
    if g <= 2 and (a % 2 == 0 or b % 2 == 0):
        h1 = 8
    elif g > 2 and a % 2 == 1 and b % 2 == 1:
        h1 = 2
    else:
        h1 = 4
    h2 = 4 if g == 1 else 2
    h = h1 if (ord2(a) == ord2(b) and g != 2) else h1 // 2
    return h, h1, h2


def multiplicity_closed(tr: Triple) -> MultiplicityReport:
    """#H by the gcd/valuation case analysis (no scan)."""
    t, u = _pair_stats(tr)
    if tr.is_compact:
        h, h1, h2 = _closed_finite(tr.a, tr.b, tr.c, t, u)
    else:
        h, h1, h2 = _closed_infinite(tr.finite_entries)
    return MultiplicityReport(h=h, h1=h1, h2=h2, t=t, u=u, method=CLOSED_FORM)


def multiplicity(
    tr: Triple, mode: str = "auto", closed_check_limit: int = CLOSED_CHECK_LIMIT
) -> MultiplicityReport:
    """Dispatch: 'auto' (brute, cross-checked), 'brute', or 'closed'.

    Auto always returns the brute-force counts; when 2m is small enough
    it also runs the closed form and records whether the two agree.
    """
    if mode not in ("auto", "brute", "closed"):
        raise ValueError(f"unknown multiplicity mode {mode!r}")
    if mode == "closed":
        return multiplicity_closed(tr)
    report = multiplicity_brute(tr)
    if mode == "auto" and tr.two_m <= closed_check_limit:
        closed = multiplicity_closed(tr)
        report.agreement = closed.h == report.h
        report.closed_h = closed.h
    return report
