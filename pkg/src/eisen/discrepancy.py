"""Exact circle discrepancy and the population census of circles.

For the N = r_Q(n) lattice points on |mu|^2 = n with angles phi_j, the
discrepancy is

    Delta(n) = sup over arcs [alpha, beta) of | #{j: phi_j in arc}/N - (beta-alpha)/(2 pi) |.

With G(t) = #{j: phi_j < t}/N - t/(2 pi), an arc's signed error is
G(beta) - G(alpha), so Delta = sup G - inf G over [0, 2 pi], where G
takes its extreme values only at 0 or at the jump points: the supremum
uses the right limits G(phi+) and the infimum the left limits G(phi-).
That gives an exact O(N log N) evaluation.

The census side: a circle is populated iff every inert prime divides n
to an even power; b_q(x) counts populated circles up to x, and the
survey measures how often Delta(n) beats the power law N^{-gamma}.
Delta(n) >= 1/(2 r_Q(n)) always (six-fold symmetry leaves gaps), and
gamma must stay below log(pi)/log(2) - 1 for the census fraction to
have a limit.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import factor

TWO_PI = 2.0 * math.pi

# exponent ceiling for the survey power law N^{-gamma}
GAMMA_MAX = math.log(math.pi) / math.log(2.0) - 1.0


@dataclass(frozen=True)
class DiscrepancyResult:
    n: int
    count: int
    delta: float
    witness: tuple[float, float]  # arc endpoints attaining the sup (may degenerate)


def _delta_from_angles(phis: np.ndarray) -> tuple[float, float, float]:
    """(delta, t_lo, t_hi) for angles reduced mod 2 pi.

    t_hi locates the supremum of G (right limits), t_lo the infimum
    (left limits); 0.0 stands in when the boundary value G(0) = 0 wins.
    """
    n = phis.size
    if n == 0:
        raise ValueError("empty angle set")
    u, counts = np.unique(np.mod(phis, TWO_PI), return_counts=True)
    cum = np.cumsum(counts)
    drift = u / TWO_PI
    g_right = cum / n - drift
    g_left = (cum - counts) / n - drift
    i_hi = int(np.argmax(g_right))
    i_lo = int(np.argmin(g_left))
    sup_g = max(0.0, float(g_right[i_hi]))
    inf_g = min(0.0, float(g_left[i_lo]))
    t_hi = float(u[i_hi]) if g_right[i_hi] > 0.0 else 0.0
    t_lo = float(u[i_lo]) if g_left[i_lo] < 0.0 else 0.0
    return sup_g - inf_g, t_lo, t_hi


def discrepancy_exact(n: int) -> DiscrepancyResult:
    """Exact Delta(n) over all arcs, with a witness arc.

    The witness (alpha, beta) is the pair of extremal jump locations:
    arcs just past alpha and through beta realize the sup in the limit.
    For a single orbit (N = 6) every gap is equal and the witness
    degenerates to a point; that matches Delta(1) = 1/6 attained by
    arbitrarily short arcs around one point.
    """
    pts = factor.circle_points(n)
    if pts.count == 0:
        raise ValueError(f"no lattice points on |mu|^2 = {n}")
    phis = np.array([z.arg() for z in pts.points], dtype=np.float64)
    delta, t_lo, t_hi = _delta_from_angles(phis)
    witness = (t_lo, t_hi) if t_lo <= t_hi else (t_hi, t_lo)
    return DiscrepancyResult(n=n, count=pts.count, delta=float(delta), witness=witness)


def discrepancy_random_lower_bound(n: int, arcs: int = 10000, seed: int = 0) -> float:
    """Best discrepancy over `arcs` random arcs; a lower bound for Delta(n).

    Useful as a sanity probe: it can only approach the exact sweep from
    below since it samples a finite subset of arcs.
    """
    if arcs < 1:
        raise ValueError("arcs >= 1")
    pts = factor.circle_points(n)
    if pts.count == 0:
        raise ValueError(f"no lattice points on |mu|^2 = {n}")
    phis = np.sort(np.mod(np.array([z.arg() for z in pts.points]), TWO_PI))
    rng = np.random.default_rng(seed)
    ab = rng.uniform(0.0, TWO_PI, size=(arcs, 2))
    alpha = ab.min(axis=1)
    beta = ab.max(axis=1)
    inside = np.searchsorted(phis, beta, side="left") - np.searchsorted(phis, alpha, side="left")
    err = np.abs(inside / pts.count - (beta - alpha) / TWO_PI)
    return float(err.max())


def erdos_turan_bound(n: int, T: int, C: float = 4.0) -> float:
    """Erdos-Turan upper bound C (1/T + sum_{k<=T} |Z_k| / k).

    Z_k is the k-th moment (1/N) sum_j e^{i k phi_j}.  Six-fold symmetry
    kills every k not divisible by 6, so only k = 6, 12, ... contribute.
    """
    if T < 1:
        raise ValueError("T >= 1")
    if C <= 0:
        raise ValueError("C > 0")
    pts = factor.circle_points(n)
    if pts.count == 0:
        raise ValueError(f"no lattice points on |mu|^2 = {n}")
    phis = np.array([z.arg() for z in pts.points], dtype=np.float64)
    total = 1.0 / T
    for k in range(1, T + 1):
        zk = np.exp(1j * k * phis).mean()
        total += abs(zk) / k
    return C * total


def representable_sieve(x: int) -> np.ndarray:
    """Boolean table t[0..x]: t[n] iff r_Q(n) > 0.

    n is populated iff v_q(n) is even for every inert prime q (q = 2
    mod 3).  A parity sieve XORs each power's indicator; n survives if
    no inert prime ends with odd parity.
    """
    if x < 1:
        raise ValueError("x >= 1")
    ok = np.ones(x + 1, dtype=bool)
    ok[0] = False
    parity = np.zeros(x + 1, dtype=bool)
    for q in factor.primes_up_to(x):
        q = int(q)
        if q % 3 != 2:
            continue
        if q * q > x:
            # only the first power fits: odd parity exactly on multiples
            ok[q::q] = False
            continue
        parity[:] = False
        pw = q
        while pw <= x:
            parity[pw::pw] ^= True
            pw *= q
        ok &= ~parity
    return ok


def b_q(x: int) -> int:
    """Number of populated circles |mu|^2 = n with 1 <= n <= x."""
    if x > 10**7:
        raise ValueError("census capped at x = 1e7")
    return int(np.count_nonzero(representable_sieve(x)))


@dataclass(frozen=True)
class SurveyReport:
    x: int
    gamma: float
    b_q: int  # populated circles up to x
    m_gamma: int  # of those, circles with Delta(n) > r_Q(n)^{-gamma}
    fraction: float


def _survey_block(norms: np.ndarray, angs: np.ndarray, starts: np.ndarray,
                  ends: np.ndarray, gamma: float) -> int:
    exceeding = 0
    for s, e in zip(starts, ends):
        group = np.sort(np.mod(angs[s:e], TWO_PI))
        m = e - s
        # distinct points on one circle have distinct angles
        pos = np.arange(1, m + 1, dtype=np.float64)
        drift = group / TWO_PI
        sup_g = max(0.0, float(np.max(pos / m - drift)))
        inf_g = min(0.0, float(np.min((pos - 1.0) / m - drift)))
        if sup_g - inf_g > m ** (-gamma):
            exceeding += 1
    return exceeding


def discrepancy_survey(x: int, gamma: float, threads: int = 1) -> SurveyReport:
    """Fraction of populated circles up to x with Delta(n) > r_Q(n)^{-gamma}.

    Enumerates every lattice point of norm <= x once, groups by norm,
    and runs the exact sweep per circle.  Requires gamma strictly below
    GAMMA_MAX = log(pi)/log(2) - 1, the threshold above which the
    comparison becomes vacuous for the typical circle.
    """
    if not 1 <= x <= 10**6:
        raise ValueError("x must lie in [1, 1e6]")
    if not 0.0 < gamma < GAMMA_MAX:
        raise ValueError(f"gamma must lie in (0, {GAMMA_MAX:.4f}) = (0, log(pi)/log(2) - 1)")
    if threads < 1:
        raise ValueError("threads >= 1")
    norms, angs = factor.lattice_norms_angles(x)
    uniq, starts = np.unique(norms, return_index=True)
    ends = np.append(starts[1:], norms.size)
    populated = uniq.size
    if threads == 1 or populated < 4 * threads:
        exceeding = _survey_block(norms, angs, starts, ends, gamma)
    else:
        bounds = np.linspace(0, populated, threads + 1, dtype=int)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futs = [
                pool.submit(_survey_block, norms, angs, starts[lo:hi], ends[lo:hi], gamma)
                for lo, hi in zip(bounds[:-1], bounds[1:])
                if hi > lo
            ]
            exceeding = sum(f.result() for f in futs)
    return SurveyReport(
        x=x,
        gamma=gamma,
        b_q=int(populated),
        m_gamma=int(exceeding),
        fraction=exceeding / populated,
    )
