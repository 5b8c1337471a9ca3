"""The exponential sums S(n, A) over circle points and their averages.

    S(n, A) = sum over |mu|^2 = n of e^{i A arg(mu)}

Summing over the six associates of any point kills every A not
divisible by 6, so S(n, A) = 0 identically when 6 does not divide A.
For A = 6a the sum factors over the prime decomposition of n:

    S(n, 6a) = 6 * (-1)^(a v_3(n))
             * prod over split p^e || n of  sum_{j=0..e} e^{i 6a (2j-e) theta_p}
             * prod over inert q^e || n of  (1 if e even else 0)

and f_A(n) := |S(n, 6a)|/6 is multiplicative with f_A(p) = 2|cos 6a theta_p|.
The averaged size (1/x) sum_{n<=x} |S(n, A)| decays like a negative
power of log x; avg_exp_sum measures that decay.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import factor
from .factor import circle_points, factor_int, split_prime_generator


@dataclass(frozen=True)
class ExpSumValue:
    n: int
    A: int
    value: complex


@dataclass(frozen=True)
class AverageDecayReport:
    A: int
    checkpoints: tuple[tuple[int, float], ...]
    fitted_exponent: float


def exp_sum(n: int, A: int) -> ExpSumValue:
    """Direct angle summation of e^{iA arg mu} over the points of norm n."""
    if A == 0:
        raise ValueError("A = 0 is just r_Q(n); use r_q")
    pts = circle_points(n)
    value = sum(cmath.exp(1j * A * z.arg()) for z in pts.points)
    return ExpSumValue(n, A, complex(value))


def _split_factor_signed(theta: float, e: int, a: int) -> float:
    # sum_{j=0..e} e^{i 6a (2j-e) theta}; the terms pair into cosines
    return math.fsum(math.cos(6.0 * a * (2 * j - e) * theta) for j in range(e + 1))


def exp_sum_product(n: int, A: int) -> complex:
    """S(n, A) by the factorization product; exact 0 when 6 does not
    divide A, and a real number otherwise."""
    if A == 0:
        raise ValueError("A = 0 is just r_Q(n); use r_q")
    if n < 1:
        raise ValueError("n >= 1 required")
    if A % 6 != 0:
        return 0j
    a = A // 6
    value = 6.0
    for p, e in factor_int(n).items():
        if p == 3:
            if (a * e) % 2 == 1:
                value = -value
            continue
        if p % 3 == 2:
            if e % 2 == 1:
                return 0j
            continue
        value *= _split_factor_signed(split_prime_generator(p).theta_p, e, a)
    return complex(value)


def f_A(n: int, A: int) -> float:
    """|S(n, A)| / 6 via the product form; needs A a nonzero multiple of 6."""
    if A == 0 or A % 6 != 0:
        raise ValueError("f_A is defined for nonzero multiples of 6")
    return abs(exp_sum_product(n, A)) / 6.0


def circle_sums(x: int, A: int, threads: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Arrays (S_re, S_im) with S_re[n] + i S_im[n] = S(n, A) for n <= x,
    accumulated by norm-bucketed counting over all lattice points.

    Chunks are merged in a fixed order, so the result does not depend on
    the thread count.
    """
    if x < 1:
        raise ValueError("x >= 1 required")
    out_re = np.zeros(x + 1)
    out_im = np.zeros(x + 1)

    def one(chunk: tuple[np.ndarray, np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
        norms, angles = chunk
        ph = A * angles
        return (
            np.bincount(norms, weights=np.cos(ph), minlength=x + 1),
            np.bincount(norms, weights=np.sin(ph), minlength=x + 1),
        )

    chunks = factor.iter_lattice_blocks(x)
    if threads <= 1:
        for pre, pim in map(one, chunks):
            out_re += pre
            out_im += pim
    else:
        # submit in waves so at most `threads` dense partials are alive
        with ThreadPoolExecutor(max_workers=threads) as pool:
            done = False
            while not done:
                wave = []
                for chunk in chunks:
                    wave.append(pool.submit(one, chunk))
                    if len(wave) == threads:
                        break
                else:
                    done = True
                for fut in wave:
                    pre, pim = fut.result()
                    out_re += pre
                    out_im += pim
    return out_re, out_im


def _checkpoint_means(abs_s: np.ndarray, checkpoints: list[int]) -> list[tuple[int, float]]:
    # extended-precision running total over the segments between checkpoints
    means = []
    total = np.longdouble(0.0)
    prev = 1
    for cp in checkpoints:
        total = total + np.sum(abs_s[prev : cp + 1], dtype=np.longdouble)
        prev = cp + 1
        means.append((cp, float(total / cp)))
    return means


def avg_exp_sum(
    x: int, A: int, checkpoints: list[int] | None = None, threads: int = 1
) -> AverageDecayReport:
    """Means (1/x') sum_{n<=x'} |S(n, A)| at each checkpoint x' <= x.

    The fitted exponent is the least-squares slope of log(mean) against
    log log x', using only checkpoints >= 10^3 (small x is noise).  When
    6 does not divide A every S(n, A) vanishes identically and the means
    are exact zeros.
    """
    if x < 1 or x > 10**7:
        raise ValueError("x must be in [1, 1e7]")
    if A == 0:
        raise ValueError("A = 0 is the trivial Gauss circle count")
    if checkpoints is None:
        checkpoints = [x]
    if not checkpoints:
        raise ValueError("empty checkpoint list")
    cps = sorted(set(int(c) for c in checkpoints))
    if cps[0] < 1 or cps[-1] > x:
        raise ValueError("checkpoints must lie in [1, x]")
    if A % 6 != 0:
        means = [(cp, 0.0) for cp in cps]
        return AverageDecayReport(A, tuple(means), float("nan"))
    s_re, s_im = circle_sums(cps[-1], A, threads=threads)
    abs_s = np.hypot(s_re, s_im)
    means = _checkpoint_means(abs_s, cps)
    pts = [(math.log(math.log(cp)), math.log(m)) for cp, m in means if cp >= 1000 and m > 0]
    if len(pts) >= 2:
        xs = np.array([p[0] for p in pts])
        ys = np.array([p[1] for p in pts])
        slope = float(np.polyfit(xs, ys, 1)[0])
    else:
        slope = float("nan")
    return AverageDecayReport(A, tuple(means), slope)


def katai_bound_diag(x: int, A: int) -> tuple[float, float]:
    """Diagnostic pair (lhs, rhs) for the multiplicative-average bound:

        lhs = sum_{n<=x} f_A(n)
        rhs = (x / log x) * exp( sum_{p<=x} f_A(p) / p )

    The interesting quantity is the ratio lhs/rhs, which should stay of
    bounded order as x grows.
    """
    if x < 16:
        raise ValueError("x >= 16 required")
    if A == 0 or A % 6 != 0:
        raise ValueError("katai diagnostic needs A a nonzero multiple of 6")
    a = A // 6
    s_re, s_im = circle_sums(x, A)
    lhs = float(np.sum(np.hypot(s_re, s_im), dtype=np.longdouble) / 6.0)
    p_arr, t_arr = factor.split_prime_angles(x)
    prime_sum = float(np.sum(2.0 * np.abs(np.cos(6.0 * a * t_arr)) / p_arr))
    if x >= 3:
        prime_sum += 1.0 / 3.0  # f_A(3) = 1
    rhs = x / math.log(x) * math.exp(prime_sum)
    return lhs, rhs
