"""Arithmetic dimension: hyperbolic Galois classes of a triangle.

adim(a, b, c) is the number of scan classes whose conjugate triangle is
hyperbolic.  The identity class always is, so adim >= 1; an infinite c
makes every class hyperbolic, giving the closed value phi(2m) / #H.

is_r_arithmetic answers "adim == r" and may stop a scan early: the
hyperbolic tally is monotone, #H never exceeds 16 (at most eight sign
patterns solve the defining congruences mod m, each lifting to two units
mod 2m), so a tally beyond 16 r already proves adim > r.  A cheaper
rejection runs first: distinct odd primes p below half the largest
finite entry, coprime to 2m, land in pairwise distinct classes that are
also distinct from the identity; finding r of them with hyperbolic
conjugates proves adim > r with O(1) work per prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import PRIMES, Triple, is_infinite
from .curvature import CurvatureSign, curvature_sign
from .errors import InvariantViolation
from .scan import ScanCounts, scan_triple

H_MAX = 16  # universal bound on #H, see module docstring

QUICK_REJECT_PROBE_BUDGET = 40


@dataclass
class AdimResult:
    adim: int
    m: int
    phi2m: int
    h: int
    classes: int  # phi(2m) / h, the degree of the invariant trace field
    hyperbolic_ks: int
    spherical_ks: int


def _result_from_counts(t: Triple, counts: ScanCounts) -> AdimResult:
    phi, hyp, sph, h = counts.phi, counts.hyp, counts.sph, counts.h
    if hyp + sph != phi:
        raise InvariantViolation(
            f"tally mismatch for {t}: {hyp} + {sph} != phi(2m) = {phi}"
        )
    if phi % h != 0 or hyp % h != 0:
        raise InvariantViolation(
            f"class counts for {t} not divisible by #H={h}: phi={phi}, hyp={hyp}"
        )
    value = hyp // h
    classes = phi // h
    if not 1 <= value <= classes:
        raise InvariantViolation(f"adim {value} outside [1, {classes}] for {t}")
    return AdimResult(
        adim=value,
        m=t.m,
        phi2m=phi,
        h=h,
        classes=classes,
        hyperbolic_ks=hyp,
        spherical_ks=sph,
    )


def adim(t: Triple, method: str = "auto") -> AdimResult:
    """Arithmetic dimension with full tallies.

    method 'auto' uses the closed count for an infinite c (every class
    is hyperbolic); 'scan' forces the exhaustive pass even then.  The
    scan is never truncated here, so the reported tallies are total.
    """
    if method not in ("auto", "scan"):
        raise ValueError(f"unknown adim method {method!r}")
    if method == "auto" and not t.is_compact:
        counts = scan_triple(t, need_curvature=False, need_h=True)
        counts.hyp = counts.phi
        counts.sph = 0
        return _result_from_counts(t, counts)
    counts = scan_triple(t, need_curvature=True, need_h=True)
    return _result_from_counts(t, counts)


def quick_reject(t: Triple, r: int, probe_budget: int = QUICK_REJECT_PROBE_BUDGET) -> bool:
    """True if adim(t) > r is proven by small scan classes.

    Tests odd k coprime to 2m with 2k < max finite entry; any two such k
    are distinct and nonidentity as classes, so r of them with
    hyperbolic conjugates plus the identity class exceed r.  False means
    "not decided", never "accepted".
    """
    s_max = t.max_finite
    if s_max < 7:
        return False
    half = (s_max - 1) // 2
    two_m = t.two_m
    hyperbolic = 0
    tested = 0
    for k in range(3, half + 1, 2):
        if tested >= probe_budget:
            return False
        if math.gcd(k, two_m) != 1:
            continue
        tested += 1
        if curvature_sign(t, k) is CurvatureSign.NEGATIVE:
            hyperbolic += 1
            if hyperbolic >= r:
                return True
    return False


def is_r_arithmetic(t: Triple, r: int, use_quick_reject: bool = True) -> bool:
    """Whether adim(t) == r, allowing early exit on a conclusive tally."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if use_quick_reject and quick_reject(t, r):
        return False
    if not t.is_compact:
        counts = scan_triple(t, need_curvature=False, need_h=True)
        return counts.phi == r * counts.h
    counts = scan_triple(t, need_curvature=True, need_h=True, hyp_cap=H_MAX * r)
    if counts.early_exit:
        return False
    if counts.hyp % counts.h != 0:
        raise InvariantViolation(
            f"hyperbolic tally {counts.hyp} not divisible by #H={counts.h} for {t}"
        )
    return counts.hyp == r * counts.h
