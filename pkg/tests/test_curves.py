import math

import numpy as np
import pytest

from lfunc.curves import (
    CountConfig,
    CountRecord,
    HyperCurve,
    count_points,
    count_points_ext,
    count_record,
    count_rows,
    frobenius_roots,
    hasse_weil_local,
    hasse_weil_table,
    local_factor_from_counts,
    naive_count,
    naive_count_ext,
    normalized_satake,
    trace_x3_minus_x,
    two_squares,
)
from lfunc.errors import ArityError, BadReductionError, ConsistencyError, DomainError, WorkBoundError
from lfunc.euler import check_partial_ramanujan, expand_local
from lfunc.primes import sieve

E32 = HyperCurve((0, -1, 0, 1))          # y^2 = x^3 - x
E31 = HyperCurve((1, 1, 0, 1))           # y^2 = x^3 + x + 1
C5 = HyperCurve((1, 0, 0, 0, 0, 1))      # y^2 = x^5 + 1
C5b = HyperCurve((1, -1, 0, 0, 0, 1))    # y^2 = x^5 - x + 1
C6 = HyperCurve((1, 0, 0, 0, 0, 0, 3))   # y^2 = 3x^6 + 1, two or zero points at infinity


def test_genus_and_bad_primes():
    assert E32.genus_g == 1 and C5.genus_g == 2 and C6.genus_g == 2
    assert E32.disc_primes == {2}
    assert E31.disc_primes == {2, 31}
    assert C5.disc_primes == {2, 5}
    assert 3 in C6.disc_primes  # leading coefficient


def test_curve_validation():
    with pytest.raises(DomainError):
        HyperCurve((1, 1))
    with pytest.raises(DomainError):
        HyperCurve((0, 0, 1, 1))  # x^2 (x + 1): repeated root
    with pytest.raises(DomainError):
        HyperCurve((1,) * 8)


def test_count_examples():
    assert count_points(E32, 5) == 8
    assert count_points(E32, 3) == 4
    assert count_record(E32, 3).a_p == 0
    assert count_points(C5, 3) == 4
    assert count_record(C5, 3, ext=False).a_p == 0


def test_count_ext_examples():
    assert count_points_ext(E32, 3) == 16
    assert count_points_ext(E32, 5) == 32
    # alpha + conj(alpha) = a_p, alpha * conj(alpha) = p  =>  a(p^2 count) = a_p^2 - 2p
    for p in [3, 5, 7, 11, 13]:
        ap = count_record(E32, p).a_p
        assert count_points_ext(E32, p) == p * p + 1 - (ap * ap - 2 * p)


@pytest.mark.parametrize("curve", [E32, E31, C5, C5b, C6])
def test_production_equals_naive(curve):
    for p in sieve(60).primes.tolist():
        if curve.is_good(p):
            assert count_points(curve, p) == naive_count(curve, p), p


@pytest.mark.parametrize("curve", [E32, E31, C5, C5b, C6])
def test_extension_equals_naive(curve):
    for p in [3, 5, 7, 11, 13]:
        if curve.is_good(p):
            assert count_points_ext(curve, p) == naive_count_ext(curve, p), p


def test_bad_prime_rejected():
    with pytest.raises(BadReductionError):
        count_points(E32, 2)
    with pytest.raises(BadReductionError):
        count_points_ext(C5, 5)


def test_work_bounds():
    with pytest.raises(WorkBoundError):
        count_points_ext(E32, 3167)
    with pytest.raises(WorkBoundError):
        count_points(E32, 101, CountConfig(max_p=100))


def test_local_factor_genus1():
    assert local_factor_from_counts(E32, count_record(E32, 5)) == (1, 2, 5)
    assert local_factor_from_counts(E32, count_record(E32, 3)) == (1, 0, 3)


def test_local_factor_genus2_power_sums():
    for p in [3, 7, 11, 13, 17]:
        rec = count_record(C5, p)
        poly = local_factor_from_counts(C5, rec)
        roots = frobenius_roots(poly, p)
        s1 = p + 1 - rec.N1
        s2 = p * p + 1 - rec.N2
        assert abs(sum(roots) - s1) < 1e-6
        assert abs(sum(r * r for r in roots) - s2) < 1e-6
        # prod (1 - alpha T) gives back the integer polynomial
        lhs = np.array([1.0 + 0j])
        for r in roots:
            lhs = np.convolve(lhs, [1, -r])
        np.testing.assert_allclose(lhs, poly, atol=1e-6)


def test_genus2_needs_N2():
    with pytest.raises(ArityError):
        local_factor_from_counts(C5, CountRecord(3, 4, None, 2))


def test_inconsistent_counts():
    with pytest.raises(ConsistencyError):
        CountRecord(5, 20, None, 1)  # |a_p| = 14 > 2 sqrt 5
    with pytest.raises(ConsistencyError):
        # s1 = 0, s2 = 1 -> e2 = -1/2
        local_factor_from_counts(C5, CountRecord(3, 4, 9, 2))


def test_hasse_weil_table_e32():
    b = hasse_weil_table(E32, 100)
    assert b[1] == 1
    assert b[5] == pytest.approx(-2 / math.sqrt(5))
    # 1/(1 + 2T + 5T^2) = 1 - 2T + (4 - 5)T^2 + ...
    assert b[25] == pytest.approx(-1 / 5)
    assert b[2] == 0 and b[4] == 0  # bad prime gets the trivial factor
    assert b[15] == pytest.approx(b[3] * b[5])
    raw = hasse_weil_table(E32, 200, normalize=False)
    for p in [3, 5, 7, 11, 13]:
        ap = p + 1 - count_points(E32, p)
        assert raw[p] == pytest.approx(ap)
        assert raw[p * p] == pytest.approx(ap * ap - p)


def test_hasse_weil_genus2_table():
    raw = hasse_weil_table(C5b, 200, normalize=False)
    for p in [3, 7, 11, 13]:
        rec = count_record(C5b, p)
        assert raw[p] == pytest.approx(p + 1 - rec.N1)
        series = expand_local(normalized_satake(C5b, p, rec), 2)
        assert raw[p * p] / p == pytest.approx(series[2], abs=1e-9)


def test_genus2_large_prime_skips_extension():
    s = hasse_weil_local(C5, 3163 + 4, 1)  # beyond the F_p^2 bound; only a(p) needed
    assert s.truncation_J == 1


def test_normalized_satake_unit_modulus():
    for curve in [E32, E31, C5, C5b]:
        for p in [3, 7, 13, 29, 41]:
            if curve.is_good(p):
                s = normalized_satake(curve, p)
                assert s.degree_d == 2 * curve.genus_g
                assert check_partial_ramanujan(s, 0).ok


def test_two_squares_and_cm_trace():
    assert two_squares(5) == (1, 2)
    assert two_squares(13) == (3, 2)
    for p in sieve(3000).primes.tolist()[1:]:
        assert trace_x3_minus_x(p) == p + 1 - count_points(E32, p), p
    with pytest.raises(DomainError):
        two_squares(7)


def test_auto_method_matches_counting():
    a = hasse_weil_table(E32, 2000, method="auto")
    b = hasse_weil_table(E32, 2000)
    np.testing.assert_allclose(a.dense[1:], b.dense[1:], atol=1e-12)


def test_count_rows():
    rows = count_rows(E32, 7)
    assert [(r.p, r.N1, r.a_p) for r in rows] == [(3, 4, 0), (5, 8, -2), (7, 8, 0)]
    rows = count_rows(C5, 13, ext=True)
    assert [r.p for r in rows] == [3, 7, 11, 13]
    assert all(r.N2 is not None and r.local_poly for r in rows)
