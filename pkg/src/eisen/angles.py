"""Angle statistics of prime ideals: sectors, character sums, bad circles.

Every prime ideal of Z[w] gets a norm and a canonical angle:

    split p = 1 (mod 3)   two ideals, norm p, angles +theta_p and -theta_p
    inert q = 2 (mod 3)   one ideal, norm q^2, angle 0
    ramified p = 3        one ideal, norm 3, angle -pi/6

The angles theta_p equidistribute in [-pi/6, pi/6) as the norm bound
grows; sector_count compares against the Prime Ideal Theorem density
(3/pi) * (phi2 - phi1) * Li(x), and chi_prime_sum evaluates the Hecke
character sum sum e^{i 6a theta} over ideals, whose cancellation is the
quantitative form of equidistribution.

bad_circle builds the opposite extreme: products of split primes with
tiny angles give circles whose many points all cluster within epsilon
of the six directions k*pi/3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from . import factor
from .analytic import li
from .factor import CirclePointSet, circle_points, primes_up_to, r_q

PI_6 = math.pi / 6.0


def _ideal_arrays(x: float) -> tuple[np.ndarray, np.ndarray]:
    """(norms, angles) of all prime ideals with norm <= x, sorted by
    norm, the conjugate pair above a split p ordered +theta first."""
    if x < 2:
        return np.empty(0, dtype=np.int64), np.empty(0)
    if x > 10**8:
        raise ValueError("ideal enumeration capped at 1e8")
    xi = math.floor(x)
    p_arr, t_arr = factor.split_prime_angles(xi)
    inert_q = primes_up_to(math.isqrt(xi))
    inert_q = inert_q[inert_q % 3 == 2]
    norms = [p_arr, p_arr, inert_q * inert_q]
    thetas = [t_arr, -t_arr, np.zeros(len(inert_q))]
    if x >= 3:
        norms.append(np.array([3], dtype=np.int64))
        thetas.append(np.array([-PI_6]))
    n_all = np.concatenate(norms)
    t_all = np.concatenate(thetas)
    order = np.lexsort((-t_all, n_all))
    return n_all[order], t_all[order]


def prime_ideals_up_to(x: float) -> list[tuple[int, float]]:
    """One (norm, angle) entry per prime ideal of norm <= x."""
    norms, thetas = _ideal_arrays(x)
    return [(int(n), float(t)) for n, t in zip(norms, thetas)]


@dataclass(frozen=True)
class SectorQuery:
    x: float
    phi1: float
    phi2: float

    def __post_init__(self) -> None:
        if not (self.x >= 2):
            raise ValueError("x >= 2 required")
        if not (-PI_6 <= self.phi1 < self.phi2 < PI_6):
            raise ValueError("need -pi/6 <= phi1 < phi2 < pi/6")


def sector_count(q: SectorQuery) -> tuple[int, float]:
    """Observed ideal count with angle in [phi1, phi2] against the
    Prime Ideal Theorem main term (3/pi)(phi2 - phi1) Li(x).

    The interval is closed; a 1e-12 outward tolerance absorbs
    floating-point ties at the endpoints.
    """
    _, thetas = _ideal_arrays(q.x)
    eps = 1e-12
    observed = int(np.count_nonzero((thetas >= q.phi1 - eps) & (thetas <= q.phi2 + eps)))
    expected = 3.0 / math.pi * (q.phi2 - q.phi1) * li(q.x)
    return observed, expected


@dataclass(frozen=True)
class CharacterSumValue:
    x: float
    a: int
    value: complex


def chi_prime_sum(x: float, a: int) -> CharacterSumValue:
    """sum over prime ideals of norm <= x of chi^{6a}(p) = e^{i 6a theta}."""
    if a == 0:
        raise ValueError("a = 0 just counts the ideals")
    _, thetas = _ideal_arrays(x)
    value = complex(np.sum(np.exp(1j * 6 * a * thetas)))
    return CharacterSumValue(x, a, value)


def chi_prime_sum_decomposition(x: float, a: int) -> complex:
    """The same sum assembled from its three parts:

        sum_{p<=x, p=1(3)} 2 cos(6a theta_p)
      + #{q = 2 (3) : q^2 <= x}
      + (-1)^a [3 <= x]
    """
    if a == 0:
        raise ValueError("a = 0 just counts the ideals")
    xi = math.floor(x)
    p_arr, t_arr = factor.split_prime_angles(xi)
    split_part = float(np.sum(2.0 * np.cos(6.0 * a * t_arr)))
    inert_q = primes_up_to(math.isqrt(xi))
    inert_part = int(np.count_nonzero(inert_q % 3 == 2))
    ram = ((-1) ** a if x >= 3 else 0)
    return complex(split_part + inert_part + ram)


def theta_equidistribution_stat(x: float) -> float:
    """Kolmogorov-Smirnov distance between the ideal angles of norm <= x
    and the uniform distribution on [-pi/6, pi/6)."""
    if x < 100:
        raise ValueError("x >= 100 required")
    _, thetas = _ideal_arrays(x)
    if len(thetas) < 10:
        raise ValueError("fewer than 10 ideals below x")
    return float(stats.kstest(thetas, stats.uniform(loc=-PI_6, scale=2 * PI_6).cdf).statistic)


def split_prime_reciprocal_sum(x: int) -> float:
    """sum of 1/p over split primes p <= x (Mertens in the progression
    1 mod 3: this is (1/2) log log x + O(1))."""
    p_arr, _ = factor.split_prime_angles(x)
    return float(np.sum(1.0 / p_arr))


@dataclass(frozen=True)
class BadCircle:
    n: int
    primes: tuple[int, ...]
    m: int
    epsilon: float
    points: CirclePointSet


def bad_circle(epsilon: float, k: int) -> BadCircle:
    """A circle with at least k points, all within epsilon of the six
    directions j*pi/3.

    Take the smallest m with 6 * 2^m >= k and multiply the m smallest
    split primes whose angles lie in (0, epsilon/m]; each of the
    6 * 2^m points then has angle j*pi/3 + (sum of m signed angles),
    off by at most m * (epsilon/m) = epsilon.
    """
    if not (0 < epsilon < PI_6):
        raise ValueError("epsilon must lie in (0, pi/6)")
    if k < 1:
        raise ValueError("k >= 1 required")
    m = 0
    while 6 * (1 << m) < k:
        m += 1
    if m == 0:
        primes: tuple[int, ...] = ()
        n = 1
    else:
        delta = epsilon / m
        bound = 10**5
        while True:
            p_arr, t_arr = factor.split_prime_angles(bound)
            qual = p_arr[t_arr <= delta]
            if len(qual) >= m:
                primes = tuple(int(p) for p in qual[:m])
                break
            if bound >= 10**8:
                raise RuntimeError(
                    f"fewer than {m} split primes with angle <= {delta:.3g} below 1e8"
                )
            bound *= 10
        n = math.prod(primes)
    pts = circle_points(n)
    assert pts.count == 6 * (1 << m) == r_q(n)
    for z in pts.points:
        off = abs(math.remainder(z.arg(), math.pi / 3.0))
        if off > epsilon + 1e-9:
            raise RuntimeError(f"point {z} of {n} misses the sector by {off - epsilon:.3g}")
    return BadCircle(n, primes, m, epsilon, pts)
