"""Complete enumeration of the r-arithmetic triples.

Finiteness engine, in three layers:

 1. Every r-arithmetic triple has its r-th nondividing prime q bounded by
    the mode's maxNDP, giving hard caps a < 3q, b < 6q^2, c < 18q^4
    (2q for entries of noncompact triples).
 2. Small c (up to twice maxNDP) is scanned directly.
 3. Larger c must be divisible by one of r running divisors: for each
    odd prime q <= maxNDP not dividing ab there is a height
    c_bound_for_prime(a, b, q) beyond which a nondividing q forces a
    hyperbolic conjugate class; an r-arithmetic triple has only r - 1
    such classes to spend, so above the j-th bound all but r - 1 of the
    first j primes divide c.  Absorbing primes into r divisors round
    robin in bound order makes c a multiple of at least one divisor, and
    only those multiples are tested.

A prime enters the running divisors only once windows pass
max(c_bound_for_prime, 2q + 1): the class-counting step needs both
c >= the bound (hyperbolic class) and 2q < c (the class is distinct
from the identity and from the other absorbed primes).  Raising
max_prime_index only strengthens the divisors; the final window up to
the c cap is always checked, so completeness never depends on the
prime count.

The public per-pair routine is search_cs; enumerate_triples runs the
same candidate logic batched in numpy across all pairs (plus the
noncompact loop), then re-verifies every hit with a full dimension
computation before emitting records.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional, Tuple, Union

from .core import INFINITY, PRIMES, Triple, min_hyperbolic_c
from .curvature import c_bound_for_prime
from .dimension import adim, is_r_arithmetic
from .errors import InvariantViolation
from .records import DIRECT_SCAN, DIVISOR_FILTER, NONCOMPACT_LOOP, TripleRecord
from . import batchsearch

PAPER_MODE = "paper"
SAFE_MODE = "safe"

_WINDOW_GUARD = 10**7  # a unit-divisor window this long means a logic bug


@dataclass(frozen=True)
class EnumerationConfig:
    r: int
    bound_mode: Union[str, int] = SAFE_MODE  # "paper", "safe", or explicit odd-prime index
    max_prime_index: Optional[int] = None  # default: maxNDPIndex * r, capped at maxNDPIndex
    direct_scan_limit_multiplier: int = 2
    threads: int = 1

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.direct_scan_limit_multiplier < 2:
            # the divisor walk only starts above 2*maxNDP; a lower ceiling
            # would leave (ceiling, 2*maxNDP] uncovered
            raise ValueError("direct_scan_limit_multiplier must be >= 2")


@dataclass(frozen=True)
class Bounds:
    max_ndp: int
    max_ndp_index: int
    a_max: int
    b_max: int
    c_max: int
    noncompact_max: int
    direct_ceiling: int
    prime_count: int


def safe_threshold(r: int) -> int:
    """Prime ceiling max(251, ceil(5 r ln r)) above which no r-th
    nondividing prime of an r-arithmetic triple can lie."""
    return max(251, math.ceil(5 * r * math.log(r))) if r > 1 else 251


def bounds_for_r(cfg: EnumerationConfig) -> Bounds:
    mode = cfg.bound_mode
    if mode == PAPER_MODE:
        idx = max(36, 2 * cfg.r + 5)
        q = PRIMES.odd_prime(idx)
    elif mode == SAFE_MODE:
        q = PRIMES.largest_prime_below(safe_threshold(cfg.r))
        idx = PRIMES.odd_prime_index(q)
    elif isinstance(mode, int) and not isinstance(mode, bool):
        idx = mode
        q = PRIMES.odd_prime(idx)
    else:
        raise ValueError(f"unknown bound mode {mode!r}")
    requested = cfg.max_prime_index if cfg.max_prime_index is not None else idx * cfg.r
    return Bounds(
        max_ndp=q,
        max_ndp_index=idx,
        a_max=3 * q - 1,
        b_max=6 * q * q - 1,
        c_max=18 * q**4 - 1,
        noncompact_max=2 * q,
        direct_ceiling=cfg.direct_scan_limit_multiplier * q,
        prime_count=requested,
    )


BoundToPrimes = Dict[int, List[int]]


def map_bounds_to_primes(a: int, b: int, prime_count: int, c_max: int) -> BoundToPrimes:
    """Group the first prime_count odd primes coprime to ab by their c bound,
    iterable in increasing bound order."""
    out: BoundToPrimes = {}
    for i in range(1, prime_count + 1):
        q = PRIMES.odd_prime(i)
        if a % q == 0 or b % q == 0:
            continue
        bd = c_bound_for_prime(a, b, q)
        out.setdefault(bd, []).append(q)
    return dict(sorted(out.items()))


def _effective_bound_items(a: int, b: int, prime_count: int) -> list:
    """(absorption height, primes) pairs in increasing height order.

    The absorption height of q is max(c_bound_for_prime, 2q + 1): below
    it the prime's conjugate class is not yet forced hyperbolic-and-
    distinct, so it cannot be counted against the class budget.
    """
    out: Dict[int, List[int]] = {}
    for i in range(1, prime_count + 1):
        q = PRIMES.odd_prime(i)
        if a % q == 0 or b % q == 0:
            continue
        bd = max(c_bound_for_prime(a, b, q), 2 * q + 1)
        out.setdefault(bd, []).append(q)
    return sorted(out.items())


def walk_divisor_windows(
    r: int,
    bound_items: list,
    c_max: int,
    start: int,
    test: Callable[[int], bool],
    emit: Callable[[int], None],
) -> None:
    """Test divisor multiples window by window, absorbing primes in height order.

    Window [startc, bound) is checked against the divisors accumulated
    from all earlier bounds; then the bound's primes multiply into the
    divisors round robin.  A final sentinel window reaches c_max.
    """
    divisors = [1] * r
    slot = 0
    startc = start
    items = list(bound_items) + [(c_max + 1, [])]
    for bound, primes in items:
        window_end = min(bound, c_max + 1)
        if window_end > startc:
            candidates = set()
            for d in divisors:
                if d > c_max:
                    continue
                first = -(-startc // d) * d
                if d == 1 and window_end - first > _WINDOW_GUARD:
                    raise InvariantViolation(
                        f"unit-divisor window [{first}, {window_end}) is implausibly long"
                    )
                candidates.update(range(first, window_end, d))
            for c in sorted(candidates):
                if test(c):
                    emit(c)
        for q in primes:
            divisors[slot] *= q
            slot = (slot + 1) % r
        if all(d > c_max for d in divisors):
            break
        if bound > startc:
            startc = bound


def search_cs(a: int, b: int, cfg: EnumerationConfig, sink: Callable[[tuple], None]) -> None:
    """All r-arithmetic (a, b, c) for this pair: direct scan then divisor walk.

    The direct scan owns c up to the ceiling; the walk covers the rest of
    (ceiling, c_max].  Hits go to the sink as (a, b, c) tuples, already
    deduplicated.
    """
    if not (2 <= a <= b):
        raise ValueError("need 2 <= a <= b, both finite")
    bounds = bounds_for_r(cfg)
    try:
        cmin = min_hyperbolic_c(a, b)
    except ValueError:
        return  # (2, 2) never extends to a hyperbolic triple
    seen = set()

    def emit(c: int) -> None:
        if c not in seen:
            seen.add(c)
            sink((a, b, c))

    def test(c: int) -> bool:
        return is_r_arithmetic(Triple.of(a, b, c), cfg.r)

    for c in range(cmin, min(bounds.direct_ceiling, bounds.c_max) + 1):
        if test(c):
            emit(c)

    items = _effective_bound_items(a, b, bounds.prime_count)
    walk_start = max(cmin, bounds.direct_ceiling + 1, 2 * bounds.max_ndp + 1)
    walk_divisor_windows(cfg.r, items, bounds.c_max, walk_start, test, emit)


def filter_hits_for_a(a: int, cfg: EnumerationConfig, bounds: Bounds) -> list:
    """Divisor-walk hits (a, b, c) over all admissible b for a fixed a.

    b is additionally capped below 2 * maxNDP * a: an r-arithmetic triple
    with c beyond the direct ceiling admits a spherical prime class
    p <= q, and the window inequality then forces b < 2 q a.
    """
    b_lo = max(a, 3)
    b_hi = min(bounds.b_max, 2 * bounds.max_ndp * a - 1)
    if b_hi < b_lo:
        return []
    survivors = batchsearch.pair_kill_survivors(a, b_lo, b_hi, cfg.r, bounds)
    hits = []
    for b in survivors:
        b = int(b)
        cmin = min_hyperbolic_c(a, b)
        items = _effective_bound_items(a, b, bounds.prime_count)
        walk_start = max(cmin, bounds.direct_ceiling + 1, 2 * bounds.max_ndp + 1)

        def test(c: int, _a=a, _b=b) -> bool:
            return is_r_arithmetic(Triple.of(_a, _b, c), cfg.r)

        walk_divisor_windows(
            cfg.r, items, bounds.c_max, walk_start, test, lambda c, _b=b: hits.append((a, _b, c))
        )
    return hits


def _verified_record(entry: tuple, r: int, via: str) -> TripleRecord:
    t = Triple.of(*entry)
    result = adim(t)
    if result.adim != r:
        raise InvariantViolation(
            f"search path produced {t} but adim recomputes to {result.adim}, not {r}"
        )
    return TripleRecord(t, result.adim, t.is_compact, via)


def enumerate_triples(cfg: EnumerationConfig) -> list:
    """The full set of r-arithmetic triples as sorted, verified records."""
    bounds = bounds_for_r(cfg)
    r = cfg.r
    found: Dict[tuple, str] = {}

    def add(entries, via):
        for e in entries:
            found.setdefault(e, via)

    def run(fn, args_list):
        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                return list(pool.map(fn, args_list))
        return [fn(args) for args in args_list]

    # direct box: all triples with c up to the ceiling
    ceiling = min(bounds.direct_ceiling, bounds.c_max)
    c_blocks = _split_range(4, ceiling, 16)
    for block_hits in run(
        lambda blk: batchsearch.direct_box_hits(r, blk[0], blk[1], bounds), c_blocks
    ):
        add(block_hits, DIRECT_SCAN)

    # divisor filter: c beyond the ceiling, for every pair
    for a_hits in run(lambda a: filter_hits_for_a(a, cfg, bounds), range(2, bounds.a_max + 1)):
        add(a_hits, DIVISOR_FILTER)

    # noncompact loop
    add(batchsearch.noncompact_hits(r, bounds.noncompact_max), NONCOMPACT_LOOP)

    records = [_verified_record(e, r, via) for e, via in found.items()]
    records.sort(key=TripleRecord.key)
    return records


def _split_range(lo: int, hi: int, n_blocks: int) -> list:
    if hi < lo:
        return []
    size = max(1, (hi - lo + 1) // n_blocks)
    blocks = []
    start = lo
    while start <= hi:
        end = min(hi, start + size - 1)
        blocks.append((start, end))
        start = end + 1
    return blocks


def summarize(records: list) -> tuple:
    compact = sum(1 for rec in records if rec.compact)
    return compact, len(records) - compact
