"""Tally engine over the Galois scan domain of a triple.

One pass over the units k modulo 2m produces, as requested:

  * phi  -- the unit count (Euler phi of 2m),
  * hyp / sph -- how many k give a hyperbolic / spherical conjugate,
  * h, h1, h2 -- orders of the stabilizer chain fixing the triangle data.

Stabilizer membership, for k coprime to 2m:

  h2: k = +-1 (mod 2s) for every finite s   (every half-angle cosine fixed)
  h1: k = +-1 (mod s)  for every finite s   (every squared cosine fixed)
  h:  k in h1 and the triple cosine product is fixed.  A factor with s = 2
      contributes cos(k pi/2) = 0, so any finite entry equal to 2 makes the
      product condition automatic; otherwise the product is fixed exactly
      when the number of sign flips (k = s +- 1 mod 2s) is even.

The scan walks odd k in [1, m] only: k and 2m - k agree on every mask
(cosine folding, coprimality, the congruences above are all symmetric),
so each survivor counts twice.  m == 1 (the all-infinite triple) is the
lone special case with a single unit.

Exact arithmetic throughout: the numpy path is only taken when every
intermediate product provably fits in int64, otherwise a plain-int path
runs the same logic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Triple, is_infinite, prime_factors
from .errors import InvariantViolation

_INT64_SAFE = 1 << 62


@dataclass
class ScanCounts:
    phi: int
    hyp: int
    sph: int
    h: int
    h1: int
    h2: int
    early_exit: bool = False


def _odd_prime_factors_of_m(t: Triple) -> list:
    out = set()
    for s in t.finite_entries:
        out.update(prime_factors(s))
    out.discard(2)
    return sorted(out)


def scan_triple(
    t: Triple,
    *,
    need_curvature: bool = True,
    need_h: bool = True,
    hyp_cap: int | None = None,
    start_chunk: int = 1 << 13,
    max_chunk: int = 1 << 19,
) -> ScanCounts:
    """Single pass over the scan domain with optional early cutoff.

    hyp_cap aborts the pass as soon as the hyperbolic tally exceeds it
    (the tally is monotone, so exceeding the cap is conclusive for any
    caller that only needs "more than cap").  Zero curvature for a unit
    raises InvariantViolation: it cannot happen for a hyperbolic triple.
    """
    m = t.m
    if m == 1:
        # (oo, oo, oo): a single unit, trivially hyperbolic and fixed.
        return ScanCounts(phi=1, hyp=1, sph=0, h=1, h1=1, h2=1)

    finite = t.finite_entries
    c_finite = t.is_compact
    odd_ps = _odd_prime_factors_of_m(t)
    numpy_ok = (not c_finite) or (2 * t.a * t.b * t.c < _INT64_SAFE)
    if not numpy_ok:
        return _scan_python(t, finite, odd_ps, need_curvature, need_h, hyp_cap)

    a = b = c = 0
    if c_finite:
        a, b, c = t.a, t.b, t.c
        ab = a * b

    has_two = 2 in finite
    flip_entries = [s for s in finite if s > 2]

    phi = hyp = sph = h = h1 = h2 = 0
    early = False
    lo = 1
    chunk = start_chunk
    while lo <= m:
        hi = min(m + 1, lo + 2 * chunk)
        ks = np.arange(lo, hi, 2, dtype=np.int64)
        lo = hi
        chunk = min(max_chunk, chunk * 2)

        coprime = np.ones(ks.shape, dtype=bool)
        for p in odd_ps:
            coprime &= ks % p != 0
        n_cop = int(np.count_nonzero(coprime))
        if n_cop == 0:
            continue
        phi += 2 * n_cop

        if need_curvature:
            if c_finite:
                ta = ks % (2 * a)
                ka = np.minimum(ta, 2 * a - ta)
                tb = ks % (2 * b)
                kb = np.minimum(tb, 2 * b - tb)
                tc = ks % (2 * c)
                kc = np.minimum(tc, 2 * c - tc)
                low = c * np.abs(ka * b + kb * a - ab)
                mid = kc * ab
                high = c * (ab - np.abs(ka * b - kb * a))
                zero = ((mid == low) | (mid == high)) & coprime
                if zero.any():
                    kz = int(ks[zero][0])
                    raise InvariantViolation(
                        f"curvature vanished for {t} at k={kz}; "
                        "input is not a valid hyperbolic triple"
                    )
                neg = ((mid < low) | (mid > high)) & coprime
                n_neg = int(np.count_nonzero(neg))
                hyp += 2 * n_neg
                sph += 2 * (n_cop - n_neg)
            else:
                hyp += 2 * n_cop

        if need_h:
            in_h1 = coprime.copy()
            in_h2 = coprime.copy()
            for s in finite:
                r1 = ks % s
                in_h1 &= (r1 == 1) | (r1 == s - 1)
                r2 = ks % (2 * s)
                in_h2 &= (r2 == 1) | (r2 == 2 * s - 1)
            if has_two or not flip_entries:
                in_h = in_h1
            else:
                flips = np.zeros(ks.shape, dtype=np.int8)
                for s in flip_entries:
                    r2 = ks % (2 * s)
                    flips += ((r2 == s - 1) | (r2 == s + 1)).astype(np.int8)
                in_h = in_h1 & (flips % 2 == 0)
            h += 2 * int(np.count_nonzero(in_h))
            h1 += 2 * int(np.count_nonzero(in_h1))
            h2 += 2 * int(np.count_nonzero(in_h2))

        if hyp_cap is not None and hyp > hyp_cap:
            early = True
            break

    return ScanCounts(phi=phi, hyp=hyp, sph=sph, h=h, h1=h1, h2=h2, early_exit=early)


def _scan_python(t, finite, odd_ps, need_curvature, need_h, hyp_cap):
    """Plain-int fallback for triples whose products exceed the int64 lane."""
    m = t.m
    c_finite = t.is_compact
    if c_finite:
        a, b, c = t.a, t.b, t.c
        ab = a * b
    has_two = 2 in finite
    flip_entries = [s for s in finite if s > 2]

    phi = hyp = sph = h = h1 = h2 = 0
    early = False
    for k in range(1, m + 1, 2):
        if any(k % p == 0 for p in odd_ps):
            continue
        phi += 2
        if need_curvature:
            if c_finite:
                ta = k % (2 * a)
                ka = ta if ta <= a else 2 * a - ta
                tb = k % (2 * b)
                kb = tb if tb <= b else 2 * b - tb
                tc = k % (2 * c)
                kc = tc if tc <= c else 2 * c - tc
                low = c * abs(ka * b + kb * a - ab)
                mid = kc * ab
                high = c * (ab - abs(ka * b - kb * a))
                if mid == low or mid == high:
                    raise InvariantViolation(
                        f"curvature vanished for {t} at k={k}; "
                        "input is not a valid hyperbolic triple"
                    )
                if mid < low or mid > high:
                    hyp += 2
                else:
                    sph += 2
            else:
                hyp += 2
        if need_h:
            in_h1 = all(k % s in (1, s - 1) for s in finite)
            if in_h1:
                h1 += 2
                if has_two or not flip_entries:
                    h += 2
                else:
                    flips = sum(k % (2 * s) in (s - 1, s + 1) for s in flip_entries)
                    if flips % 2 == 0:
                        h += 2
            if all(k % (2 * s) in (1, 2 * s - 1) for s in finite):
                h2 += 2
        if hyp_cap is not None and hyp > hyp_cap:
            early = True
            break
    return ScanCounts(phi=phi, hyp=hyp, sph=sph, h=h, h1=h1, h2=h2, early_exit=early)
