"""Genus-2, full-level Siegel eigenforms: Satake data, Hecke eigenvalues, spin factors.

Normalised parameters relate to the classical ones by
``alpha_p = p^-(k-3/2) alpha0`` and ``beta_p = p^-(k-3/2) alpha0 alpha1``,
with ``alpha0^2 alpha1 alpha2 = p^(2k-3)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .euler import SatakeLocal, expand_local


@dataclass(frozen=True)
class SiegelLocal:
    p: int
    weight_k: int
    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if self.alpha == 0 or self.beta == 0:
            raise DomainError(f"p={self.p}: Satake parameters must be nonzero")

    @classmethod
    def from_classical(cls, p: int, weight_k: int, alpha0: complex, alpha1: complex) -> SiegelLocal:
        scale = p ** -(weight_k - 1.5)
        return cls(p, weight_k, scale * alpha0, scale * alpha0 * alpha1)


def eigenvalues(sl: SiegelLocal) -> tuple[complex, complex]:
    """Hecke eigenvalues (mu(p), mu(p^2))."""
    p, k, a, b = sl.p, sl.weight_k, sl.alpha, sl.beta
    mu_p = p ** (k - 1.5) * (a + 1 / a + b + 1 / b)
    mu_p2 = p ** (2 * k - 3) * (
        a**2 + a**-2 + (a + 1 / a) * (b + 1 / b) + b**2 + b**-2 + 2 - 1 / p
    )
    return mu_p, mu_p2


def normalized_trace(sl: SiegelLocal) -> complex:
    """p^(3/2-k) mu(p) = alpha + 1/alpha + beta + 1/beta."""
    return sl.p ** (1.5 - sl.weight_k) * eigenvalues(sl)[0]


def spin_local(sl: SiegelLocal) -> SatakeLocal:
    a, b = sl.alpha, sl.beta
    return SatakeLocal.good(sl.p, (a, 1 / a, b, 1 / b))


def mu_from_spin(sl: SiegelLocal) -> tuple[complex, complex]:
    """Eigenvalues rebuilt from the spin Dirichlet coefficients.

    h_2 of {a, 1/a, b, 1/b} is a^2 + a^-2 + b^2 + b^-2 + (a + 1/a)(b + 1/b) + 2,
    so mu(p^2) = p^(2k-3) (a(p^2) - 1/p) and mu(p) = p^(k-3/2) a(p).
    """
    p, k = sl.p, sl.weight_k
    series = expand_local(spin_local(sl), 2)
    return p ** (k - 1.5) * series[1], p ** (2 * k - 3) * (series[2] - 1 / p)


def saito_kurokawa_ap(p: int, beta: complex) -> complex:
    """a(p) = sqrt(p) + 1/sqrt(p) + beta + 1/beta for a Saito-Kurokawa lift."""
    beta = complex(beta)
    if abs(abs(beta) - 1) > 1e-9:
        raise DomainError(f"beta must have unit modulus, got |beta|={abs(beta)}")
    sp = math.sqrt(p)
    return sp + 1 / sp + beta + 1 / beta


def saito_kurokawa_local(p: int, weight_k: int, beta: complex) -> SiegelLocal:
    """Spin parameters {sqrt(p), 1/sqrt(p), beta, 1/beta} of an SK lift."""
    saito_kurokawa_ap(p, beta)
    return SiegelLocal(p, weight_k, math.sqrt(p), beta)


def classical_satake(sl: SiegelLocal) -> tuple[complex, complex, complex]:
    p, k, a, b = sl.p, sl.weight_k, sl.alpha, sl.beta
    alpha0 = p ** (k - 1.5) * a
    return alpha0, b / a, 1 / (a * b)


def random_unit(rng: np.random.Generator) -> complex:
    return cmath.exp(2j * math.pi * rng.random())
