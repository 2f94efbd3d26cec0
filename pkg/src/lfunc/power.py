"""Partial symmetric/exterior power local factors and Euler-factor peeling.

Only good primes are handled; the power objects are partial L-functions
with bad primes omitted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Literal

import numpy as np

from .errors import ArityError, DomainError, PartialLError
from .euler import LocalSeries, SatakeLocal, poly_mul, series_divide

PeelMode = Literal["p1_p2_tail", "p1_sym2_style", "p1_squared_ext2_style"]
PEEL_MODES = ("p1_p2_tail", "p1_sym2_style", "p1_squared_ext2_style")


@dataclass(frozen=True)
class PowerKind:
    kind: Literal["sym", "ext"]
    n: int

    def __post_init__(self):
        if self.kind not in ("sym", "ext"):
            raise DomainError(f"unknown power kind {self.kind!r}")
        if self.n < 1:
            raise DomainError(f"power must be >= 1, got {self.n}")

    def degree(self, d: int) -> int:
        return comb(self.n + d - 1, d - 1) if self.kind == "sym" else comb(d, self.n)


def compositions(n: int, d: int):
    """Tuples (i_1..i_d) of nonnegative ints summing to n, lexicographic order."""
    if d == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, d - 1):
            yield (first,) + rest


def power_satake(s: SatakeLocal, k: PowerKind) -> SatakeLocal:
    if not s.is_good:
        raise PartialLError(f"p={s.p} is a bad prime; power factors are defined at good primes only")
    d = s.degree_d
    al = s.alphas
    if k.kind == "sym":
        roots = [np.prod([al[j] ** e for j, e in enumerate(c)]) for c in compositions(k.n, d)]
    else:
        if k.n > d:
            raise ArityError(f"ext^{k.n} of a degree-{d} factor is empty")
        roots = [np.prod([al[j] for j in c]) for c in itertools.combinations(range(d), k.n)]
    return SatakeLocal.good(s.p, roots)


@dataclass(frozen=True)
class CoeffIdentities:
    """Right-hand sides of the coefficient identities at one good prime.

    ``sym_n_first[n-1]`` is the predicted a(p, sym^n) = a(p^n) for n = 1..J.
    """

    sym_n_first: tuple[complex, ...]
    ext2_p: complex
    ext3_p: complex
    sym2_p2: complex


def coeff_identities(series: LocalSeries, d: int) -> CoeffIdentities:
    if series.truncation_J < 4:
        raise ArityError(f"need a(p^j) up to j=4, series has J={series.truncation_J}")
    a = series.coeffs
    return CoeffIdentities(
        sym_n_first=tuple(complex(x) for x in a[1:]),
        ext2_p=complex(a[1] ** 2 - a[2]),
        ext3_p=complex(a[3] + a[1] ** 3 - 2 * a[1] * a[2]),
        sym2_p2=complex(a[4] - a[1] * a[3] + a[2] ** 2),
    )


@dataclass(frozen=True)
class PeelResult:
    head_factors: tuple[np.ndarray, ...]
    tail: LocalSeries

    def product(self) -> np.ndarray:
        J = self.tail.truncation_J
        out = self.tail.coeffs
        for h in self.head_factors:
            out = poly_mul(out, h, J)
        return out


def peel(series: LocalSeries, mode: PeelMode) -> PeelResult:
    """Split off low-order factors from one Euler factor.

    p1_p2_tail            (1 + a(p)X)(1 + a(p^2)X^2) * tail, tail = 1 + O(X^3)
    p1_sym2_style         (1 + a(p)X) * tail
    p1_squared_ext2_style (1 + a(p)X + a(p)^2 X^2) * tail

    Other splittings exist; these are the three used in the factorisations
    of L(s) around the sym^2 and ext^2 factors.
    """
    J = series.truncation_J
    if J < 3:
        raise ArityError(f"peeling needs J >= 3, got {J}")
    a1, a2 = series[1], series[2]
    if mode == "p1_p2_tail":
        heads = (np.array([1, a1]), np.array([1, 0, a2]))
    elif mode == "p1_sym2_style":
        heads = (np.array([1, a1]),)
    elif mode == "p1_squared_ext2_style":
        heads = (np.array([1, a1, a1 * a1]),)
    else:
        raise DomainError(f"unknown peel mode {mode!r}")
    heads = tuple(np.asarray(h, dtype=np.complex128) for h in heads)
    tail = series.coeffs
    for h in heads:
        tail = series_divide(tail, h, J)
    if mode == "p1_p2_tail":
        # the recurrence yields these as exact zeros; pin them against -0.0 noise
        tail[1] = tail[2] = 0
    tail[0] = 1
    return PeelResult(heads, LocalSeries(series.p, tail))
