"""Satake parameters, local Euler factors and global Dirichlet coefficients.

A local factor at p is ``F_p(z) = prod_j (1 - alpha_j z)`` and the Euler
factor is ``1 / F_p(p^-s)``.  Its expansion in ``X = p^-s`` has coefficients
``a(p^l) = h_l(alpha)``, the complete homogeneous symmetric polynomials.
Bad primes carry fewer than ``d`` parameters; zero roots are dropped rather
than stored.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DomainError, IncompleteInputError
from .primes import is_prime, primes_upto

ATOL = 1e-9


@dataclass(frozen=True)
class SatakeLocal:
    p: int
    alphas: tuple[complex, ...]
    degree_d: int

    def __post_init__(self):
        alphas = tuple(complex(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if self.degree_d < 1:
            raise DomainError(f"degree must be >= 1, got {self.degree_d}")
        if len(alphas) > self.degree_d:
            raise DomainError(
                f"p={self.p}: {len(alphas)} parameters exceed degree {self.degree_d}"
            )
        for a in alphas:
            if a == 0:
                raise DomainError(f"p={self.p}: zero roots are represented by omission")
            if not (math.isfinite(a.real) and math.isfinite(a.imag)):
                raise DomainError(f"p={self.p}: non-finite Satake parameter {a}")

    @classmethod
    def good(cls, p: int, alphas: Iterable[complex]) -> SatakeLocal:
        alphas = tuple(alphas)
        return cls(p, alphas, len(alphas))

    @property
    def is_good(self) -> bool:
        return len(self.alphas) == self.degree_d

    @property
    def m(self) -> int:
        return len(self.alphas)


@dataclass(frozen=True)
class LocalSeries:
    """Truncated expansion ``[a(1), a(p), ..., a(p^J)]`` of one Euler factor."""

    p: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128)
        if c.ndim != 1 or len(c) == 0:
            raise DomainError("local series needs at least the constant term")
        if c[0] != 1:
            raise DomainError(f"p={self.p}: constant term must be exactly 1, got {c[0]}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def truncation_J(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j):
        return self.coeffs[j]


class RamanujanCheck(NamedTuple):
    ok: bool
    exponent: float


def poly_mul(a: Sequence[complex], b: Sequence[complex], trunc: int | None = None) -> np.ndarray:
    out = np.convolve(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))
    return out if trunc is None else out[: trunc + 1]


def series_inverse(c: Sequence[complex], J: int) -> np.ndarray:
    """Coefficients of 1/c(X) to order J; requires c[0] == 1."""
    return series_divide([1.0], c, J)


def series_divide(num: Sequence[complex], den: Sequence[complex], J: int) -> np.ndarray:
    """Quotient num/den truncated at X^J by forward substitution (den[0] == 1)."""
    num = np.asarray(num, dtype=np.complex128)
    den = np.asarray(den, dtype=np.complex128)
    out = np.zeros(J + 1, dtype=np.complex128)
    for l in range(J + 1):
        acc = num[l] if l < len(num) else 0.0
        for i in range(1, min(l, len(den) - 1) + 1):
            acc -= den[i] * out[l - i]
        out[l] = acc
    return out


def local_factor_poly(s: SatakeLocal) -> np.ndarray:
    """Coefficients (ascending) of prod (1 - alpha_j z)."""
    poly = np.array([1.0], dtype=np.complex128)
    for a in s.alphas:
        poly = poly_mul(poly, [1.0, -a])
    return poly


def expand_local(s: SatakeLocal, J: int) -> LocalSeries:
    if J < 0:
        raise DomainError(f"truncation must be >= 0, got {J}")
    return LocalSeries(s.p, series_inverse(local_factor_poly(s), J))


def check_partial_ramanujan(s: SatakeLocal, theta: float) -> RamanujanCheck:
    """Whether every |alpha| <= p^theta, allowing 1e-9 multiplicative slack.

    The exponent is max log|alpha| / log p (0.0 when there are no roots).
    """
    if theta < 0:
        raise DomainError(f"theta must be >= 0, got {theta}")
    if not s.alphas:
        return RamanujanCheck(True, 0.0)
    logp = math.log(s.p)
    exps = [math.log(abs(a)) / logp for a in s.alphas]
    bound = s.p**theta * (1 + ATOL)
    ok = all(abs(a) <= bound for a in s.alphas)
    return RamanujanCheck(ok, max(exps))


@dataclass(frozen=True)
class CoefficientTable:
    """Dirichlet coefficients a(n).

    ``dense[n]`` holds a(n) for 1 <= n <= limit (NaN marks an absent entry;
    index 0 is unused).  ``extra`` carries prime powers above ``limit``, which
    the p^2 diagnostics need long before a dense table could reach them.
    """

    limit: int
    dense: np.ndarray = field(repr=False)
    degree_d: int
    theta_claim: float | None = None
    extra: Mapping[int, complex] = field(default_factory=dict, repr=False)
    multiplicative: bool = True

    def __post_init__(self):
        d = np.asarray(self.dense, dtype=np.complex128)
        if len(d) != self.limit + 1:
            raise DomainError(f"dense array has length {len(d)}, expected {self.limit + 1}")
        d.setflags(write=False)
        object.__setattr__(self, "dense", d)
        object.__setattr__(self, "extra", dict(self.extra))

    def has(self, n: int) -> bool:
        if 1 <= n <= self.limit:
            return not np.isnan(self.dense[n].real)
        return n in self.extra

    def __getitem__(self, n: int) -> complex:
        if not self.has(n):
            raise IncompleteInputError(f"coefficient a({n}) not present")
        return complex(self.dense[n]) if n <= self.limit else complex(self.extra[n])

    def lookup(self, ns: np.ndarray) -> np.ndarray:
        """Vectorised a(n); NaN where missing."""
        ns = np.asarray(ns, dtype=np.int64)
        out = np.full(ns.shape, np.nan, dtype=np.complex128)
        inside = ns <= self.limit
        out[inside] = self.dense[ns[inside]]
        if (~inside).any():
            out[~inside] = [self.extra.get(int(n), np.nan) for n in ns[~inside]]
        return out

    def keys(self) -> list[int]:
        ks = np.flatnonzero(~np.isnan(self.dense.real))
        return [int(k) for k in ks if k >= 1] + sorted(self.extra)

    def items(self):
        for n in self.keys():
            yield n, self[n]

    @classmethod
    def from_mapping(cls, values: Mapping[int, complex], degree_d: int, limit: int | None = None,
                     **kw) -> CoefficientTable:
        if limit is None:
            limit = max(values) if values else 1
        dense = np.full(limit + 1, np.nan, dtype=np.complex128)
        extra = {}
        for n, v in values.items():
            if n < 1:
                raise DomainError(f"coefficient index must be >= 1, got {n}")
            if n <= limit:
                dense[n] = v
            else:
                extra[int(n)] = complex(v)
        return cls(limit, dense, degree_d, extra=extra, **kw)


def _local_power_values(series: LocalSeries, p: int, limit: int) -> list[tuple[int, complex]]:
    out = []
    q, j = p, 1
    while q <= limit:
        if j > series.truncation_J:
            raise IncompleteInputError(
                f"local series at p={p} truncated at J={series.truncation_J}, need p^{j}={q}"
            )
        out.append((q, complex(series[j])))
        q *= p
        j += 1
    return out


def default_truncation(p: int, limit: int) -> int:
    """floor(log limit / log p), computed exactly in integers."""
    J, q = 0, p
    while q <= limit:
        J += 1
        q *= p
    return J


def assemble_global(
    locals_: Mapping[int, LocalSeries],
    limit: int,
    *,
    degree_d: int = 1,
    theta_claim: float | None = None,
    extra_powers: int = 0,
) -> CoefficientTable:
    """Multiply local coefficients into a(n) for n <= limit.

    With ``extra_powers = k`` the table also stores a(p^j) for j <= k at every
    prime p <= limit, even where p^j > limit.
    """
    limit = int(limit)
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    a = np.ones(limit + 1, dtype=np.complex128)
    a[0] = np.nan
    extra: dict[int, complex] = {}
    primes = primes_upto(max(limit, 2)).upto(limit) if limit >= 2 else np.array([], dtype=np.int64)
    for p in primes.tolist():
        if p not in locals_:
            raise IncompleteInputError(f"no local series for prime p={p}")
        series = locals_[p]
        powers = _local_power_values(series, p, limit)
        # multiples of p, each with its p-adic valuation factor
        idx = np.arange(p, limit + 1, p)
        factor = np.full(len(idx), powers[0][1], dtype=np.complex128)
        for q, v in powers[1:]:
            factor[q // p - 1 :: q // p] = v
        a[idx] *= factor
        j, q = len(powers) + 1, powers[-1][0] * p
        while j <= extra_powers:
            if j > series.truncation_J:
                raise IncompleteInputError(f"local series at p={p} too short for p^{j}")
            extra[q] = complex(series[j])
            j += 1
            q *= p
    return CoefficientTable(limit, a, degree_d, theta_claim=theta_claim, extra=extra)


def global_from_satake(
    satake: Mapping[int, SatakeLocal],
    limit: int,
    *,
    theta_claim: float | None = None,
    extra_powers: int = 0,
) -> CoefficientTable:
    """Expand each local factor to the powers needed and assemble."""
    locals_ = {}
    degree = 1
    for p, s in satake.items():
        J = max(default_truncation(p, limit), extra_powers)
        locals_[p] = expand_local(s, J)
        degree = max(degree, s.degree_d)
    return assemble_global(locals_, limit, degree_d=degree, theta_claim=theta_claim,
                           extra_powers=extra_powers)


def zeta_local(p: int) -> SatakeLocal:
    return SatakeLocal.good(p, (1.0,))


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return int(p)
