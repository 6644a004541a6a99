"""Exact integer primitives: vertex orders with oo, prime tables, folding.

All arithmetic in this package is exact.  Python ints never overflow, so
inequality tests on products of large bounds are safe without any special
wide-integer handling; numpy fast paths elsewhere must check their own
ranges before using fixed-width lanes.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np


class InfinityType:
    """The unbounded vertex order.

    A dedicated singleton rather than a sentinel integer or float('inf'):
    accidental arithmetic with a finite order raises TypeError instead of
    silently absorbing the infinity.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        if isinstance(other, int) or other is self:
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int) or other is self:
            return True
        return NotImplemented

    def __reduce__(self):
        return (InfinityType, ())


INFINITY = InfinityType()

Order = Union[int, InfinityType]


def is_infinite(s: Order) -> bool:
    return s is INFINITY or isinstance(s, InfinityType)


def order_sort_key(s: Order) -> tuple:
    """Sort key placing the infinite order after every finite one."""
    return (1, 0) if is_infinite(s) else (0, s)


def parse_order(token: str) -> Order:
    """Parse a vertex order token: an integer >= 2, or 'oo' / 'inf'."""
    tok = token.strip().lower()
    if tok in ("oo", "inf"):
        return INFINITY
    n = int(tok)  # raises ValueError on garbage
    if n < 2:
        raise ValueError(f"finite vertex order must be >= 2, got {n}")
    return n


def validate_order(s: Order) -> None:
    if is_infinite(s):
        return
    if not isinstance(s, int) or isinstance(s, bool):
        raise TypeError(f"vertex order must be an int or oo, got {s!r}")
    if s < 2:
        raise ValueError(f"finite vertex order must be >= 2, got {s}")


class Sign:
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def chi_sign(a: Order, b: Order, c: Order) -> int:
    """Exact sign of 1/a + 1/b + 1/c - 1 (each oo drops its term).

    Negative means the triple is hyperbolic.  Computed over integers by
    clearing denominators with the product of the finite entries.
    """
    for s in (a, b, c):
        validate_order(s)
    finite = [s for s in (a, b, c) if not is_infinite(s)]
    prod = math.prod(finite)
    total = sum(prod // s for s in finite) - prod
    if total < 0:
        return Sign.NEGATIVE
    if total > 0:
        return Sign.POSITIVE
    return Sign.ZERO


def is_hyperbolic(a: Order, b: Order, c: Order) -> bool:
    return chi_sign(a, b, c) == Sign.NEGATIVE


def fold(k: int, s: Order) -> int:
    """Reduce k to the representative in [0, s] with the same cosine.

    Returns |k'| where k' is in [-s, s] and k = k' (mod 2s), so that
    cos(fold(k, s) * pi / s) == cos(k * pi / s).  For the infinite order
    the angle is zero regardless, and k is returned unchanged.
    """
    if is_infinite(s):
        return k
    t = k % (2 * s)
    return t if t <= s else 2 * s - t


@dataclass(frozen=True)
class Triple:
    """A sorted hyperbolic triple (a, b, c) with its derived lcm.

    m is the lcm of the finite entries (1 when all three are infinite);
    the Galois scan domain is the unit group modulo 2m.
    """

    a: Order
    b: Order
    c: Order
    m: int

    @classmethod
    def of(cls, a: Order, b: Order, c: Order) -> "Triple":
        for s in (a, b, c):
            validate_order(s)
        a, b, c = sorted((a, b, c), key=order_sort_key)
        if chi_sign(a, b, c) != Sign.NEGATIVE:
            raise ValueError(f"({a}, {b}, {c}) is not hyperbolic")
        finite = [s for s in (a, b, c) if not is_infinite(s)]
        m = math.lcm(*finite) if finite else 1
        return cls(a, b, c, m)

    @property
    def two_m(self) -> int:
        return 2 * self.m

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c)

    @property
    def finite_entries(self) -> tuple:
        return tuple(s for s in self.entries if not is_infinite(s))

    @property
    def is_compact(self) -> bool:
        return not is_infinite(self.c)

    @property
    def max_finite(self) -> int:
        """Largest finite entry; 0 when every entry is infinite."""
        fin = self.finite_entries
        return max(fin) if fin else 0

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"

    def sort_key(self) -> tuple:
        return order_sort_key(self.a) + order_sort_key(self.b) + order_sort_key(self.c)


class PrimeTable:
    """Grow-on-demand table of odd primes, 1-indexed (index 1 -> 3).

    The 1-indexed odd-prime convention matches the bound ladder used by
    the enumeration; helpers that need 2 as well (like ndp) use the raw
    all-primes array.  Extension is guarded by a lock and publishes a new
    array only after it is fully built, so concurrent readers always see
    a consistent prefix.
    """

    def __init__(self, initial_limit: int = 1 << 20):
        self._lock = threading.Lock()
        self._limit = 0
        self._primes = np.empty(0, dtype=np.int64)
        self._extend_to(initial_limit)

    def _extend_to(self, limit: int) -> None:
        with self._lock:
            if limit <= self._limit:
                return
            sieve = np.ones(limit + 1, dtype=bool)
            sieve[:2] = False
            for p in range(2, math.isqrt(limit) + 1):
                if sieve[p]:
                    sieve[p * p :: p] = False
            self._primes = np.flatnonzero(sieve).astype(np.int64)
            self._limit = limit

    @property
    def limit(self) -> int:
        return self._limit

    def primes_array(self) -> np.ndarray:
        """All primes up to the current limit, ascending (includes 2)."""
        return self._primes

    def ensure_limit(self, limit: int) -> None:
        if limit > self._limit:
            new = self._limit
            while new < limit:
                new *= 2
            self._extend_to(new)

    def ensure_count(self, n_odd: int) -> None:
        """Grow until at least n_odd odd primes are available."""
        while len(self._primes) - 1 < n_odd:
            self._extend_to(self._limit * 2)

    def odd_prime(self, i: int) -> int:
        """1-indexed odd prime: odd_prime(1) == 3."""
        if i < 1:
            raise ValueError("odd prime index is 1-based")
        self.ensure_count(i)
        return int(self._primes[i])  # primes_array[0] == 2, so offset works out

    def odd_primes(self, n: int) -> list:
        """The first n odd primes."""
        self.ensure_count(n)
        return [int(p) for p in self._primes[1 : n + 1]]

    def odd_prime_index(self, p: int) -> int:
        """1-based index of the odd prime p in the table."""
        self.ensure_limit(p)
        i = int(np.searchsorted(self._primes, p))
        if i >= len(self._primes) or self._primes[i] != p or p == 2:
            raise ValueError(f"{p} is not an odd prime")
        return i

    def largest_prime_below(self, n: int) -> int:
        """Largest prime strictly below n."""
        if n <= 3:
            raise ValueError("no prime below " + str(n))
        self.ensure_limit(n)
        i = int(np.searchsorted(self._primes, n))
        return int(self._primes[i - 1])

    def is_prime(self, n: int) -> bool:
        if n < 2:
            return False
        self.ensure_limit(n)
        i = int(np.searchsorted(self._primes, n))
        return i < len(self._primes) and int(self._primes[i]) == n

    def iter_primes(self) -> Iterable[int]:
        """All primes in increasing order, extending the table forever."""
        i = 0
        while True:
            if i >= len(self._primes):
                self._extend_to(self._limit * 2)
            yield int(self._primes[i])
            i += 1


PRIMES = PrimeTable()


def ndp(n: int, r: int) -> int:
    """The r-th smallest prime not dividing n."""
    if n < 1 or r < 1:
        raise ValueError("ndp needs n >= 1 and r >= 1")
    seen = 0
    for p in PRIMES.iter_primes():
        if n % p != 0:
            seen += 1
            if seen == r:
                return p
    raise AssertionError("unreachable")


def factorize(n: int) -> dict:
    """Prime factorization by trial division against the sieve table."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = {}
    root = math.isqrt(n)
    PRIMES.ensure_limit(root + 1)
    for p in PRIMES.primes_array():
        p = int(p)
        if p > root:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
            root = math.isqrt(n)
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list:
    """Distinct prime factors of n, ascending."""
    return sorted(factorize(n))


def euler_phi(n: int) -> int:
    """Euler totient via trial factorization."""
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def ord2(n: int) -> int:
    """2-adic valuation of n (n != 0)."""
    if n == 0:
        raise ValueError("ord2(0) is undefined")
    return (n & -n).bit_length() - 1


def lcm_finite(*orders: Order) -> int:
    """lcm of the finite orders among the arguments (1 if none)."""
    finite = [s for s in orders if not is_infinite(s)]
    return math.lcm(*finite) if finite else 1


def min_hyperbolic_c(a: int, b: int) -> int:
    """Smallest finite c >= b making (a, b, c) hyperbolic.

    Raises ValueError when no finite c works (only for a == b == 2).
    """
    denom = a * b - a - b
    if denom <= 0:
        raise ValueError(f"({a}, {b}, c) is never hyperbolic for finite c")
    return max(b, a * b // denom + 1)
