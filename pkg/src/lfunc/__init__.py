"""Euler-product algebra, closeness diagnostics and point counts for L-functions."""

from .curves import HyperCurve, count_points, count_points_ext, hasse_weil_table, local_factor_from_counts
from .diagnostics import hypothesis_h_partial, m_bounds, selberg_pairing, selberg_sum, siegel_compare, ssmo_sums
from .euler import (
    CoefficientTable,
    LocalSeries,
    SatakeLocal,
    assemble_global,
    check_partial_ramanujan,
    expand_local,
    global_from_satake,
    local_factor_poly,
)
from .fedata import FeData, analytic_normalize, hasse_weil_fe, spin_fe, validate_partial_selberg, validate_tempered
from .power import PowerKind, coeff_identities, peel, power_satake
from .primes import PrimeTable, chebyshev_theta, mertens_recip, sieve
from .siegel import SiegelLocal, classical_satake, eigenvalues, saito_kurokawa_ap, spin_local

__version__ = "0.1.0"
