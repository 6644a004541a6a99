"""Floating reference oracle and exhaustive small-box enumeration.

Everything here exists to check the exact integer path from the outside;
nothing here feeds results back into it.

kappa_float evaluates the curvature in mpmath interval arithmetic with
escalating precision, returning a midpoint and a rigorous radius.  The
batch variant runs rigorous float64 interval arithmetic in numpy
(endpoints nudged outward one ulp per operation, cosine values enclosed
from 60-digit evaluations), escalating only inconclusive entries.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
from mpmath import iv, mp, mpf

from .core import INFINITY, Triple, is_infinite, is_hyperbolic
from .dimension import adim, is_r_arithmetic
from .errors import InvariantViolation
from .records import DIRECT_SCAN, NONCOMPACT_LOOP, TripleRecord


class InconclusiveSign(InvariantViolation):
    """The interval around kappa straddles zero at maximum precision."""


def kappa_float(t: Triple, k: int, start_prec: int = 80, max_prec: int = 2048) -> tuple:
    """Curvature of the k-th conjugate: (midpoint, rigorous radius).

    Precision doubles until the sign is conclusive or max_prec is hit;
    a genuinely zero curvature (non-hyperbolic input) stays inconclusive
    and is returned with a tiny radius around zero.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    prec = start_prec
    while True:
        old = iv.prec
        try:
            iv.prec = prec
            cosines = []
            for s in t.entries:
                if is_infinite(s):
                    cosines.append(iv.mpf(1))
                else:
                    cosines.append(iv.cos(k * iv.pi / s))
            x, y, z = cosines
            kappa = 1 - (x**2 + y**2 + z**2 + 2 * x * y * z)
            mid = float(kappa.mid)
            rad = float(kappa.delta) / 2
        finally:
            iv.prec = old
        if rad < abs(mid) or prec >= max_prec:
            return mid, rad
        prec *= 2


def kappa_sign_checked(t: Triple, k: int, min_magnitude: float = 0.0) -> int:
    """Conclusive sign of the curvature, or raise InconclusiveSign."""
    mid, rad = kappa_float(t, k)
    if rad >= abs(mid) or abs(mid) <= min_magnitude:
        raise InconclusiveSign(f"kappa({t}; {k}) = {mid} +- {rad} is not sign-conclusive")
    return 1 if mid > 0 else -1


class _CosineTable:
    """Rigorous float64 enclosures of cos(j*pi/s) for j in [0, s]."""

    def __init__(self):
        self._cache = {}

    def get(self, s: int) -> tuple:
        got = self._cache.get(s)
        if got is not None:
            return got
        old = mp.prec
        try:
            mp.prec = 200
            lo = np.empty(s + 1)
            hi = np.empty(s + 1)
            for j in range(s + 1):
                v = mp.cos(mpf(j) * mp.pi / s)
                f = float(v)
                if mpf(f) > v:
                    hi[j] = f
                    lo[j] = np.nextafter(f, -np.inf)
                elif mpf(f) < v:
                    lo[j] = f
                    hi[j] = np.nextafter(f, np.inf)
                else:
                    lo[j] = hi[j] = f
        finally:
            mp.prec = old
        self._cache[s] = (lo, hi)
        return self._cache[s]


_COS_TABLE = _CosineTable()

_UP = np.inf
_DOWN = -np.inf


def _iadd(alo, ahi, blo, bhi):
    return np.nextafter(alo + blo, _DOWN), np.nextafter(ahi + bhi, _UP)


def _imul(alo, ahi, blo, bhi):
    p1 = alo * blo
    p2 = alo * bhi
    p3 = ahi * blo
    p4 = ahi * bhi
    lo = np.minimum(np.minimum(p1, p2), np.minimum(p3, p4))
    hi = np.maximum(np.maximum(p1, p2), np.maximum(p3, p4))
    return np.nextafter(lo, _DOWN), np.nextafter(hi, _UP)


def interval_kappa_batch(t: Triple, ks: np.ndarray) -> tuple:
    """Rigorous enclosure [lo, hi] of kappa(t; k) for an array of k."""
    los = []
    his = []
    for s in t.entries:
        if is_infinite(s):
            los.append(np.ones(ks.shape))
            his.append(np.ones(ks.shape))
        else:
            tbl_lo, tbl_hi = _COS_TABLE.get(s)
            tk = ks % (2 * s)
            idx = np.minimum(tk, 2 * s - tk)
            los.append(tbl_lo[idx])
            his.append(tbl_hi[idx])
    (xl, xh), (yl, yh), (zl, zh) = zip(los, his)
    sq = []
    for vl, vh in ((xl, xh), (yl, yh), (zl, zh)):
        sq.append(_imul(vl, vh, vl, vh))
    pl, ph = _imul(xl, xh, yl, yh)
    pl, ph = _imul(pl, ph, zl, zh)
    sl, sh = _iadd(sq[0][0], sq[0][1], sq[1][0], sq[1][1])
    sl, sh = _iadd(sl, sh, sq[2][0], sq[2][1])
    sl, sh = _iadd(sl, sh, np.nextafter(2 * pl, _DOWN), np.nextafter(2 * ph, _UP))
    return np.nextafter(1 - sh, _DOWN), np.nextafter(1 - sl, _UP)


def interval_sign_batch(t: Triple, ks: np.ndarray) -> np.ndarray:
    """Signs of kappa per k: +1, -1, or 0 where the enclosure straddles.

    Straddling entries are escalated through kappa_float; a zero result
    there means the input was not a valid hyperbolic triple.
    """
    lo, hi = interval_kappa_batch(t, ks)
    signs = np.zeros(ks.shape, dtype=np.int8)
    signs[hi < 0] = -1
    signs[lo > 0] = 1
    for i in np.flatnonzero(signs == 0):
        signs[i] = kappa_sign_checked(t, int(ks[i]))
    return signs


def brute_enumerate(r: int, box: int, exhaustive: bool = False) -> list:
    """Every r-arithmetic triple with finite entries <= box, by raw scan.

    Walks all hyperbolic sorted triples in the box (including the
    infinite-entry patterns) and keeps those of dimension r via the
    curvature scan alone: no bound ladder, no divisor filtering, no
    small-prime rejection.  exhaustive=True additionally forbids the
    early tally cutoff, computing full totals for every triple.
    """
    if box < 2:
        raise ValueError("box must be >= 2")
    hits = []

    def check(t: Triple) -> bool:
        if exhaustive:
            return adim(t, method="scan").adim == r
        return is_r_arithmetic(t, r, use_quick_reject=False)

    for c in range(4, box + 1):
        for b in range(3, c + 1):
            for a in range(2, b + 1):
                if not is_hyperbolic(a, b, c):
                    continue
                t = Triple.of(a, b, c)
                if check(t):
                    hits.append(TripleRecord(t, r, True, DIRECT_SCAN))
    for b in range(2, box + 1):
        for a in range(2, b + 1):
            if not is_hyperbolic(a, b, INFINITY):
                continue
            t = Triple.of(a, b, INFINITY)
            if check(t):
                hits.append(TripleRecord(t, r, False, NONCOMPACT_LOOP))
    for a in range(2, box + 1):
        t = Triple.of(a, INFINITY, INFINITY)
        if check(t):
            hits.append(TripleRecord(t, r, False, NONCOMPACT_LOOP))
    t = Triple.of(INFINITY, INFINITY, INFINITY)
    if check(t):
        hits.append(TripleRecord(t, r, False, NONCOMPACT_LOOP))
    hits.sort(key=TripleRecord.key)
    return hits
