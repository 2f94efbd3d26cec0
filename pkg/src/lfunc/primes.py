"""Prime tables and the weighted prime sums the diagnostics are built on."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BoundsError

MAX_LIMIT = 10**8
SEGMENT_ODDS = 1 << 20


def _small_primes(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _segmented(limit: int, segment_odds: int = SEGMENT_ODDS) -> np.ndarray:
    base = _small_primes(math.isqrt(limit) + 1)[1:]  # odd base primes
    chunks = [np.array([2], dtype=np.int64)]
    low = 3
    span = 2 * segment_odds
    while low <= limit:
        high = min(low + span, limit + 1)  # exclusive
        mask = np.ones((high - low + 1) // 2, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= high:
                break
            start = max(p * p, -(-low // p) * p)
            if start % 2 == 0:
                start += p
            if start < high:
                mask[(start - low) // 2 :: p] = False
        chunks.append(low + 2 * np.flatnonzero(mask).astype(np.int64))
        low = high if high % 2 == 1 else high + 1
    out = np.concatenate(chunks)
    return out[out <= limit]


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit`` in ascending order (read-only array)."""

    limit: int
    primes: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.primes.setflags(write=False)

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes.tolist())

    def upto(self, X: int) -> np.ndarray:
        """Primes p <= X as a view. Raises BoundsError if X exceeds the sieve."""
        if X > self.limit:
            raise BoundsError(f"X={X} exceeds sieve limit {self.limit}")
        return self.primes[: np.searchsorted(self.primes, X, side="right")]

    def count(self, X: int) -> int:
        return len(self.upto(X))


def sieve(limit: int) -> PrimeTable:
    """Segmented, odd-only sieve of Eratosthenes for 2 <= limit <= 10**8."""
    limit = int(limit)
    if not 2 <= limit <= MAX_LIMIT:
        raise BoundsError(f"sieve limit must lie in [2, {MAX_LIMIT}], got {limit}")
    return PrimeTable(limit, _segmented(limit))


def chebyshev_theta(table: PrimeTable, X: int) -> float:
    """Sum of log p over p <= X (correctly rounded via fsum)."""
    return math.fsum(np.log(table.upto(X).astype(np.float64)))


def mertens_recip(table: PrimeTable, X: int) -> float:
    """Sum of 1/p over p <= X."""
    return math.fsum(1.0 / table.upto(X).astype(np.float64))


_cache: dict[int, PrimeTable] = {}


def primes_upto(limit: int) -> PrimeTable:
    """Memoised :func:`sieve`, reusing any larger table already built."""
    for lim, tab in _cache.items():
        if lim >= limit:
            return tab if lim == limit else PrimeTable(limit, tab.upto(limit).copy())
    tab = sieve(max(int(limit), 2))
    _cache[tab.limit] = tab
    return tab


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    return all(n % q for q in range(17, math.isqrt(n) + 1, 2))
