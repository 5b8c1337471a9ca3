"""Prime-ideal angles: enumeration, sectors, character sums, bad circles."""

import math

import pytest

from eisen.angles import (
    BadCircle,
    SectorQuery,
    bad_circle,
    chi_prime_sum,
    chi_prime_sum_decomposition,
    prime_ideals_up_to,
    sector_count,
    split_prime_reciprocal_sum,
    theta_equidistribution_stat,
)
from eisen.factor import split_prime_generator

PI_6 = math.pi / 6.0


def test_small_ideal_lists():
    assert prime_ideals_up_to(1.5) == []
    assert prime_ideals_up_to(3) == [(3, -PI_6)]
    assert prime_ideals_up_to(4) == [(3, -PI_6), (4, 0.0)]
    th7 = split_prime_generator(7).theta_p
    # conjugate pair over 7 listed +theta first
    assert prime_ideals_up_to(7) == [(3, -PI_6), (4, 0.0), (7, th7), (7, -th7)]


def test_ideal_list_sorted_and_in_range():
    ideals = prime_ideals_up_to(500)
    norms = [n for n, _ in ideals]
    assert norms == sorted(norms)
    assert all(-PI_6 <= t < PI_6 for _, t in ideals)
    # norms are p (split), q^2 (inert), or 3
    assert (4, 0.0) in ideals and (25, 0.0) in ideals and (121, 0.0) in ideals


def test_ideal_enumeration_cap():
    with pytest.raises(ValueError):
        prime_ideals_up_to(2 * 10**8)


def test_sector_query_validation():
    with pytest.raises(ValueError):
        SectorQuery(1.0, 0.0, 0.1)
    with pytest.raises(ValueError):
        SectorQuery(100, 0.2, 0.1)
    with pytest.raises(ValueError):
        SectorQuery(100, -1.0, 0.1)
    with pytest.raises(ValueError):
        SectorQuery(100, 0.0, PI_6)


def test_sector_count_small_x_by_hand():
    # ideals of norm <= 20 with angle in [0, 0.4]: norm 4 at 0, norm 13
    # at ~0.245, norm 7 at ~0.333 (theta_19 ~ 0.409 falls outside)
    obs, exp = sector_count(SectorQuery(20, 0.0, 0.4))
    assert obs == 3
    # 8.860136197515328 = Li(20), mpmath li(20) - li(2)
    assert exp == pytest.approx(3.0 / math.pi * 0.4 * 8.860136197515328, rel=1e-9)


def test_sector_count_endpoints_closed():
    th7 = split_prime_generator(7).theta_p
    obs, _ = sector_count(SectorQuery(20, 0.0, th7))
    assert obs == 3  # the endpoint angle itself is counted
    obs, _ = sector_count(SectorQuery(20, th7, 0.41))
    assert obs == 2  # theta_7 and theta_19


def test_sector_ratio_near_one():
    for phi1, phi2 in ((-PI_6, 0.0), (0.0, 0.3), (-0.2, 0.25)):
        obs, exp = sector_count(SectorQuery(10**5, phi1, phi2))
        assert 0.93 < obs / exp < 1.07


def test_chi_prime_sum_tiny_x():
    # only the ramified ideal at angle -pi/6: chi^6 = e^{-i pi} = -1
    assert chi_prime_sum(3, 1).value == pytest.approx(-1.0)
    # adding the inert ideal of norm 4 (angle 0) cancels it
    assert abs(chi_prime_sum(4, 1).value) < 1e-12
    assert chi_prime_sum(3, 2).value == pytest.approx(1.0)  # e^{-2 pi i}


def test_chi_prime_sum_rejects_trivial_character():
    with pytest.raises(ValueError):
        chi_prime_sum(100, 0)
    with pytest.raises(ValueError):
        chi_prime_sum_decomposition(100, 0)


def test_chi_decomposition_matches():
    for x in (50, 1000, 10**4):
        for a in (1, 2, 3, -1):
            whole = chi_prime_sum(x, a).value
            parts = chi_prime_sum_decomposition(x, a)
            assert abs(whole - parts) < 1e-8 * max(1.0, abs(whole))


def test_chi_prime_sum_cancellation():
    # square-root scale cancellation: the sum over ~ 2 Li(x) ideals stays tiny
    v = chi_prime_sum(10**6, 1).value
    assert abs(v) / 10**6 < 0.02


def test_equidistribution_stat_decays():
    s3 = theta_equidistribution_stat(10**3)
    s5 = theta_equidistribution_stat(10**5)
    assert s5 < s3
    assert s5 < 0.01
    assert s3 == pytest.approx(0.020958083832335328, abs=1e-12)


def test_equidistribution_stat_validation():
    with pytest.raises(ValueError):
        theta_equidistribution_stat(50)


def test_split_prime_reciprocal_sum_mertens_drift():
    # sum 1/p - (1/2) log log x converges; the drift between 1e5 and
    # 1e6 is already below 3e-4
    d5 = split_prime_reciprocal_sum(10**5) - 0.5 * math.log(math.log(10**5))
    d6 = split_prime_reciprocal_sum(10**6) - 0.5 * math.log(math.log(10**6))
    assert abs(d5 - d6) < 3e-4
    assert -0.40 < d6 < -0.30


def test_bad_circle_example():
    bc = bad_circle(math.pi / 12, 48)
    assert isinstance(bc, BadCircle)
    assert bc.m == 3
    assert bc.primes == (157, 211, 241)
    assert bc.n == 157 * 211 * 241 == 7983607
    assert bc.points.count == 48
    for z in bc.points.points:
        off = abs(math.remainder(z.arg(), math.pi / 3.0))
        assert off <= math.pi / 12 + 1e-12


def test_bad_circle_prime_angles_qualify():
    bc = bad_circle(math.pi / 12, 48)
    delta = (math.pi / 12) / bc.m
    for p in bc.primes:
        assert 0 < split_prime_generator(p).theta_p <= delta


def test_bad_circle_trivial_k():
    for k in (1, 6):
        bc = bad_circle(0.3, k)
        assert bc.m == 0 and bc.n == 1 and bc.primes == ()
        assert bc.points.count == 6


def test_bad_circle_validation():
    with pytest.raises(ValueError):
        bad_circle(0.0, 10)
    with pytest.raises(ValueError):
        bad_circle(PI_6, 10)
    with pytest.raises(ValueError):
        bad_circle(0.1, 0)
