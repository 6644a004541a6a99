"""Vectorized passes behind enumerate_triples.

The per-pair logic of search_cs is exact but Python-speed; these
routines batch the two expensive outer loops in numpy:

  * direct_box_hits: all sorted triples with c in a block are screened
    at once by counting small nondividing primes whose conjugate class
    is hyperbolic (r of them prove adim > r); only survivors reach the
    exact scan.
  * pair_kill_survivors: for a fixed a, all b are screened at once by
    replaying the divisor walk; a pair stays alive only if some window
    could contain a multiple of the smallest running divisor.  The
    screen is a complete filter on its own (same pigeonhole as the
    walk, multiple alignment ignored conservatively), so killed pairs
    provably admit no triple beyond the direct ceiling.

Screen arithmetic rounds conservatively: absorption heights are
computed in float64 on exactly representable products and rounded two
up, which can only delay an absorption and widen the alive test.  The
exact walk and the exact scans downstream never see these values.
"""

from __future__ import annotations

from typing import List

import numpy as np

from .core import INFINITY, PRIMES, Triple, fold
from .dimension import is_r_arithmetic
from .errors import InvariantViolation


def _odd_probe_values(limit: int) -> List[tuple]:
    """(k, distinct prime factors) for odd k in [3, limit].

    Any set of such k coprime to 2m lands in pairwise distinct conjugate
    classes below half the top entry, so each one with a hyperbolic
    conjugate spends one unit of the class budget.
    """
    out = []
    for k in range(3, limit + 1, 2):
        ps = []
        n = k
        for q in PRIMES.iter_primes():
            if q * q > n:
                break
            if n % q == 0:
                ps.append(q)
                while n % q == 0:
                    n //= q
        if n > 1:
            ps.append(n)
        out.append((k, tuple(ps)))
    return out


def direct_box_hits(r: int, c_lo: int, c_hi: int, bounds) -> List[tuple]:
    """r-arithmetic (a, b, c) with a <= b <= c and c in [c_lo, c_hi]."""
    hits: List[tuple] = []
    probes = _odd_probe_values((c_hi - 1) // 2)
    for c in range(max(4, c_lo), c_hi + 1):
        b_vals = np.arange(3, c + 1, dtype=np.int64)
        reps = b_vals - 1
        B = np.repeat(b_vals, reps)
        offsets = np.cumsum(reps) - reps
        A = np.arange(len(B), dtype=np.int64) - np.repeat(offsets, reps) + 2
        hyper = B * c + A * c + A * B < A * B * c
        A = A[hyper]
        B = B[hyper]
        if len(A) == 0:
            continue
        M = np.lcm(np.lcm(A, B), c)
        ab = A * B
        two_a = 2 * A
        two_b = 2 * B
        count = np.zeros(len(A), dtype=np.int16)
        for k, k_primes in probes:
            if 2 * k >= c:
                break
            nondiv = M % k_primes[0] != 0
            for q in k_primes[1:]:
                nondiv &= M % q != 0
            if not nondiv.any():
                continue
            ta = k % two_a
            ka = np.minimum(ta, two_a - ta)
            tb = k % two_b
            kb = np.minimum(tb, two_b - tb)
            kc = fold(k, c)
            low = c * np.abs(ka * B + kb * A - ab)
            mid = kc * ab
            high = c * (ab - np.abs(ka * B - kb * A))
            zero = ((mid == low) | (mid == high)) & nondiv
            if zero.any():
                i = int(np.flatnonzero(zero)[0])
                raise InvariantViolation(
                    f"curvature vanished for ({int(A[i])}, {int(B[i])}, {c}) at k={k}"
                )
            count += (((mid < low) | (mid > high)) & nondiv).astype(np.int16)
            live = count < r
            n_live = int(np.count_nonzero(live))
            if n_live == 0:
                break
            if n_live * 2 < len(A):
                A = A[live]
                B = B[live]
                M = M[live]
                ab = ab[live]
                two_a = two_a[live]
                two_b = two_b[live]
                count = count[live]
        live = np.flatnonzero(count < r)
        for i in live:
            a = int(A[i])
            b = int(B[i])
            if is_r_arithmetic(Triple.of(a, b, c), r, use_quick_reject=False):
                hits.append((a, b, c))
    return hits


def _blowup_count(primes, c_max: int):
    """Smallest count of the given primes (ascending) whose product tops c_max,
    or None if even all of them do not."""
    prod = 1
    for i, q in enumerate(sorted(primes)):
        prod *= q
        if prod > c_max:
            return i + 1
    return None


def _bad_slot_margin(b_max: int) -> int:
    """Most candidate primes that can divide a single b up to b_max."""
    count = 0
    prod = 1
    for q in PRIMES.iter_primes():
        if q == 2:
            continue
        prod *= q
        if prod > b_max:
            return count
        count += 1
    raise AssertionError("unreachable")


def _kill_stage_count(primes: list, r: int, c_max: int, margin: int) -> int:
    """Stages after which every divisor provably exceeds c_max.

    After j stages each divisor received at least floor(j / r) slots, of
    which at most margin overall are blanks (primes dividing b); once
    floor(j / r) - margin reaches the count of smallest primes whose
    product tops c_max, every divisor is past it.
    """
    need = _blowup_count(primes, c_max)
    if need is None:
        return len(primes)
    return min(len(primes), (need + margin) * r)


def pair_kill_survivors(a: int, b_lo: int, b_hi: int, r: int, bounds) -> np.ndarray:
    """b values in [b_lo, b_hi] whose divisor walk could test any candidate.

    Complete: a killed b admits no r-arithmetic (a, b, c) with c above
    the direct ceiling.
    """
    c_max = bounds.c_max
    if 512 * (c_max + 2) >= 1 << 53:  # packed keys must stay float64-exact
        raise ValueError("bound mode too large for the packed pair screen")
    margin = _bad_slot_margin(bounds.b_max)
    blowup = _blowup_count(PRIMES.odd_primes(64), c_max) or 64
    target = min(256, (blowup + margin) * r)
    kill_primes = []
    for q in PRIMES.iter_primes():
        if q != 2 and a % q != 0:
            kill_primes.append(q)
            if len(kill_primes) == target:
                break
    base = max(bounds.direct_ceiling, 2 * bounds.max_ndp) + 1
    cap = c_max + 1
    n_primes = len(kill_primes)
    stages = _kill_stage_count(kill_primes, r, c_max, margin)
    # packed sort key: height * 512 | bad * 256 | prime slot (slots < 256)
    q_or_one = np.ones(512, dtype=np.int64)
    q_or_one[:n_primes] = kill_primes
    bad_key = float(cap * 512 + 256)
    survivors = []
    for lo in range(b_lo, b_hi + 1, 1 << 15):
        hi = min(b_hi, lo + (1 << 15) - 1)
        Bc = np.arange(lo, hi + 1, dtype=np.int64)
        Bf = Bc.astype(np.float64)
        nb = len(Bc)
        keys_t = np.empty((n_primes, nb), dtype=np.int64)
        for i, q in enumerate(kill_primes):
            qa = fold(q, a)
            row = np.empty(nb)
            split = int(np.searchsorted(Bc, q))  # below: fold(q, b) varies
            if split:
                bs = Bf[:split]
                tb = q % (2 * Bc[:split])
                qb = np.minimum(tb, 2 * Bc[:split] - tb).astype(np.float64)
                denom = np.abs(qa * bs + qb * a - a * bs)
                np.maximum(denom, 1.0, out=denom)
                row[:split] = np.floor((q * a) * bs / denom) + 2
            if split < nb:
                bs = Bf[split:]
                denom = np.abs((qa - a) * bs + float(q * a))  # fold(q, b) == q here
                with np.errstate(divide="ignore"):  # zero only when q | b (bad below)
                    row[split:] = np.floor((q * a) * bs / denom) + 2
            np.clip(row, 2 * q + 1, cap, out=row)  # class counting needs 2q < c
            row *= 512
            row += i
            first_bad = (q - lo % q) % q
            row[first_bad::q] = bad_key + i
            keys_t[i] = row.astype(np.int64)
        keys = np.ascontiguousarray(keys_t.T)
        keys.sort(axis=1)
        Ss = np.ascontiguousarray(keys[:, :stages].T)
        Qs = q_or_one[Ss & 511]
        Ss >>= 9

        denom_c = a * Bc - a - Bc
        lowbase = np.maximum(np.maximum(Bc, a * Bc // denom_c + 1), base)
        div_prod = np.ones((r, nb), dtype=np.int64)
        alive = np.zeros(nb, dtype=bool)
        undecided = np.arange(nb)
        alive_local = np.zeros(nb, dtype=bool)
        prev = np.zeros(nb, dtype=np.int64)
        for j in range(stages):
            w_hi = np.minimum(Ss[j], cap) - 1
            w_lo = np.maximum(lowbase, prev)
            dmin = div_prod.min(axis=0) if r > 1 else div_prod[0]
            alive_local |= (w_hi >= w_lo) & (dmin <= w_hi)
            np.minimum(div_prod[j % r] * Qs[j], cap, out=div_prod[j % r])
            prev = np.maximum(prev, Ss[j])
            if (j & 7) == 7 and j + 1 < stages:
                # settle columns already alive or with every divisor saturated
                dmin = div_prod.min(axis=0) if r > 1 else div_prod[0]
                keep = ~(alive_local | (dmin >= cap))
                kept = int(np.count_nonzero(keep))
                if kept * 2 < len(undecided):
                    alive[undecided[alive_local]] = True
                    if kept == 0:
                        undecided = undecided[:0]
                        break
                    undecided = undecided[keep]
                    alive_local = np.zeros(kept, dtype=bool)
                    Ss = Ss[:, keep]
                    Qs = Qs[:, keep]
                    div_prod = div_prod[:, keep]
                    prev = prev[keep]
                    lowbase = lowbase[keep]
        if len(undecided):
            if stages == n_primes:
                w_lo = np.maximum(lowbase, prev)
                dmin = div_prod.min(axis=0) if r > 1 else div_prod[0]
                alive_local |= (c_max >= w_lo) & (dmin <= c_max)
            alive[undecided[alive_local]] = True
        survivors.append(Bc[alive])
    return np.concatenate(survivors) if survivors else np.empty(0, dtype=np.int64)


def _phi_table(limit: int) -> np.ndarray:
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            phi[p::p] -= phi[p::p] // p
    return phi


def noncompact_hits(r: int, nmax: int) -> List[tuple]:
    """r-arithmetic triples with at least one infinite entry.

    Finite entries of such triples are bounded by twice the maximal
    nondividing prime.  Every class of a noncompact triple is
    hyperbolic, so the dimension is phi(2m)/#H exactly; pairs are
    prescreened by phi(2m) in {2r, 4r, 8r, 16r} (#H is a 2-power in
    [2, 16] once 2m > 2) and survivors are settled by the exact scan.
    """
    hits: List[tuple] = []
    if is_r_arithmetic(Triple.of(INFINITY, INFINITY, INFINITY), r):
        hits.append((INFINITY, INFINITY, INFINITY))
    for a in range(2, nmax + 1):
        if is_r_arithmetic(Triple.of(a, INFINITY, INFINITY), r):
            hits.append((a, INFINITY, INFINITY))

    phi = _phi_table(2 * nmax * (nmax - 1))
    targets = np.array([2 * r, 4 * r, 8 * r, 16 * r], dtype=np.int64)
    for a in range(2, nmax + 1):
        B = np.arange(max(a, 3), nmax + 1, dtype=np.int64)  # (2, 2, oo) is Euclidean
        if len(B) == 0:
            continue
        lcm = a * B // np.gcd(a, B)
        phi2m = phi[2 * lcm]
        for b in B[np.isin(phi2m, targets)]:
            if is_r_arithmetic(Triple.of(a, int(b), INFINITY), r):
                hits.append((a, int(b), INFINITY))
    return hits
