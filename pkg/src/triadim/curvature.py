"""Exact sign of the conjugate-triangle curvature.

For a hyperbolic triple (a, b, c) and k coprime to 2m, the k-th Galois
conjugate triangle is hyperbolic exactly when its curvature

    kappa = 1 - (cos^2(k pi/a) + cos^2(k pi/b) + cos^2(k pi/c)
                 + 2 cos(k pi/a) cos(k pi/b) cos(k pi/c))

is negative.  With k_s = fold(k, s), kappa >= 0 holds exactly when the
folded angle k_c/c sits inside the two-sided window

    |k_a/a + k_b/b - 1|  <=  k_c/c  <=  1 - |k_a/a - k_b/b|

and kappa == 0 exactly on the window boundary.  (Quadratic-in-cos
derivation: kappa as a function of z = cos(k_c pi/c) is a downward
parabola whose roots are the cosines of the window endpoints, so z
between the roots means kappa >= 0; decreasing cos maps that back to the
angle window above.)  Cross-multiplying gives a pure integer test, which
is what this module implements: NEGATIVE means the window test fails
strictly, i.e. the conjugate is hyperbolic.

Boundary equality would mean kappa == 0, which cannot happen for k
coprime to 2m on a hyperbolic triple; it is reported as ZERO so callers
can surface the precondition violation instead of miscounting.
"""

from __future__ import annotations

import math
from enum import Enum

from .core import INFINITY, Triple, fold, is_infinite, min_hyperbolic_c


class CurvatureSign(Enum):
    NEGATIVE = -1  # conjugate triangle is hyperbolic
    ZERO = 0       # degenerate; invalid under the coprimality precondition
    POSITIVE = 1   # conjugate triangle is spherical

    def __int__(self):
        return self.value


def sandwich_terms(a: int, b: int, c: int, k: int) -> tuple:
    """The three integer comparands (lo, mid, hi) of the window test.

    kappa > 0  iff  lo < mid < hi;  kappa == 0 iff mid == lo or mid == hi.
    Plain Python ints: the products can exceed 64 bits for large c.
    """
    ka = fold(k, a)
    kb = fold(k, b)
    kc = fold(k, c)
    ab = a * b
    lo = c * abs(ka * b + kb * a - ab)
    mid = kc * ab
    hi = c * (ab - abs(ka * b - kb * a))
    return lo, mid, hi


def curvature_sign(t: Triple, k: int) -> CurvatureSign:
    """Exact curvature sign for the class of k, k coprime to 2m.

    An infinite c forces every conjugate hyperbolic: the curvature equals
    -(cos(k pi/a) + cos(k pi/b))^2 < 0 (zero only for the Euclidean
    (2, 2, oo), excluded by hyperbolicity).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if math.gcd(k, t.two_m) != 1:
        raise ValueError(f"k={k} is not coprime to 2m={t.two_m}")
    if is_infinite(t.c):
        return CurvatureSign.NEGATIVE
    lo, mid, hi = sandwich_terms(t.a, t.b, t.c, k)
    if mid == lo or mid == hi:
        return CurvatureSign.ZERO
    if lo < mid < hi:
        return CurvatureSign.POSITIVE
    return CurvatureSign.NEGATIVE


def abkab_check(a: int, b: int, k: int) -> bool:
    """Whether |ab - k_a b - k_b a| >= 1.

    Always true when (a, b) extend to a hyperbolic triple and k is
    coprime to 2m; property-test helper for the bound denominator.
    """
    ka = fold(k, a)
    kb = fold(k, b)
    return abs(a * b - ka * b - kb * a) >= 1


def c_bound_for_prime(a: int, b: int, q: int) -> int:
    """Ceiling of q*a*b / |q_a b + q_b a - ab| for an odd prime q not dividing ab.

    For any hyperbolic (a, b, c) with q not dividing c and c at or above
    this bound, the class of q has negative curvature.  The denominator
    is nonzero for every (a, b) admitting a hyperbolic continuation; the
    only way it can vanish is a == b == 2, which is rejected.
    """
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be an odd prime, got {q}")
    if (a * b) % q == 0:
        raise ValueError(f"q={q} divides a*b={a * b}")
    qa = fold(q, a)
    qb = fold(q, b)
    denom = abs(qa * b + qb * a - a * b)
    if denom == 0:
        # only reachable for a == b == 2, which has no hyperbolic c
        raise ValueError(f"degenerate pair ({a}, {b}): bound denominator is zero")
    return -(-q * a * b // denom)


__all__ = [
    "CurvatureSign",
    "abkab_check",
    "c_bound_for_prime",
    "curvature_sign",
    "min_hyperbolic_c",
    "sandwich_terms",
]
