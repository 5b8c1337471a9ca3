"""Prime splitting and factorization over Z[w]; lattice points on circles.

A rational prime p behaves in Z[w] according to p mod 3:

    split     p = 1 (mod 3):  p = pi_p * conj(pi_p), two distinct primes
    inert     p = 2 (mod 3):  p stays prime (this includes 2)
    ramified  p = 3:          3 = w * pi_3^2 with pi_3 = 2 - w

For a split p the canonical associate of pi_p with positive angle gives
the unique angle theta_p in (0, pi/6); the two prime ideals above p sit
at +theta_p and -theta_p.

The number of lattice points with |mu|^2 = n is

    r_Q(n) = 6 * prod(alpha_i + 1)   over split p_i^alpha_i || n,

provided every inert prime divides n to an even power, else 0.  The
points themselves come from distributing each split multiplicity between
pi_p and conj(pi_p) and then applying the six units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from .core import (
    EisensteinInt,
    ONE,
    SQRT3,
    UNITS,
    canonical_associate,
    eis_conj,
)

# ---------------------------------------------------------------------------
# rational prime machinery

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the 12 bases cover all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(x: int) -> np.ndarray:
    """Array of primes <= x by a plain sieve of Eratosthenes."""
    if x < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(x + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(x) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


_prime_table_cache: dict[str, np.ndarray] = {}


def _prime_table(x: int) -> np.ndarray:
    """Boolean primality table 0..x, cached at the largest size seen."""
    tbl = _prime_table_cache.get("tbl")
    if tbl is None or len(tbl) <= x:
        sieve = np.ones(x + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, math.isqrt(x) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        _prime_table_cache["tbl"] = sieve
        tbl = sieve
    return tbl


_SMALL_PRIMES = [int(p) for p in primes_up_to(1 << 16)]


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n odd composite, no factor below 2^16
    if is_prime(n):
        return n
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise RuntimeError(f"rho failed on {n}")


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of a rational integer n >= 1."""
    if n < 1:
        raise ValueError("factor_int needs n >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    return out


# ---------------------------------------------------------------------------
# splitting behavior


class PrimeClass(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def classify_prime(p: int) -> PrimeClass:
    """Split/inert/ramified by p mod 3; composite input rejected."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return PrimeClass.RAMIFIED
    return PrimeClass.SPLIT if p % 3 == 1 else PrimeClass.INERT


@dataclass(frozen=True)
class PrimeSplitRecord:
    """A rational prime with its Eisenstein data.

    pi is a generator of a prime above p (None for inert p, where p is
    itself prime).  theta_p follows the closed-interval convention
    [0, pi/6] on rational primes; theta_ideal is the angle of the
    canonical associate of pi, in [-pi/6, pi/6).  For split p the two
    conventions agree; for p = 3 they sit at opposite ends (+pi/6 is an
    excluded boundary of the half-open sector, so the canonical
    associate of pi_3 has angle -pi/6).
    """

    p: int
    klass: PrimeClass
    pi: EisensteinInt | None
    theta_p: float
    theta_ideal: float


def _sqrt_mod(n: int, p: int) -> int:
    """Tonelli-Shanks square root of n modulo an odd prime p."""
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        raise ValueError(f"{n} is not a square mod {p}")
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def _represent_prime(p: int) -> EisensteinInt:
    """Some (a, b) with a^2 + ab + b^2 = p, for split p.

    Cornacchia on 4p = x^2 + 3y^2: take r odd with r^2 = -3 (mod p)
    (then automatically r^2 = -3 mod 4p), reduce (2p, r) by the
    Euclidean algorithm until the remainder drops to at most 2*sqrt(p),
    and read off x.  Falls back to a direct scan, which also serves as
    the correctness net for the reduction shortcut.
    """
    r = _sqrt_mod(p - 3, p)
    if r % 2 == 0:
        r = p - r
    a, b = 2 * p, r
    limit = math.isqrt(4 * p)
    while b > limit:
        a, b = b, a % b
    x = b
    rem = 4 * p - x * x
    if rem % 3 == 0:
        y = math.isqrt(rem // 3)
        if 3 * y * y == rem and (x - y) % 2 == 0:
            cand = EisensteinInt((x - y) // 2, y)
            if cand.norm() == p:
                return cand
    # direct scan: for each b solve a^2 + ab + (b^2 - p) = 0 exactly
    for bb in range(1, math.isqrt(4 * p // 3) + 1):
        disc = 4 * p - 3 * bb * bb
        if disc < 0:
            break
        t = math.isqrt(disc)
        if t * t != disc:
            continue
        if (t - bb) % 2 == 0:
            cand = EisensteinInt((t - bb) // 2, bb)
            if cand.norm() == p:
                return cand
    raise RuntimeError(f"no representation found for split prime {p}")


PI3 = EisensteinInt(2, -1)  # canonical associate of 1 + w; 3 = w * PI3^2

_split_record_cache: dict[int, PrimeSplitRecord] = {}


def split_prime_generator(p: int) -> PrimeSplitRecord:
    """Record for split p: generator pi with theta_p in (0, pi/6).

    Unique: of the twelve elements of norm p, exactly one lies in the
    open sector (0, pi/6).
    """
    rec = _split_record_cache.get(p)
    if rec is not None:
        return rec
    if classify_prime(p) is not PrimeClass.SPLIT:
        raise ValueError(f"{p} is not split (p mod 3 = {p % 3})")
    z, _ = canonical_associate(_represent_prime(p))
    if z.b < 0:
        z = eis_conj(z)
        z, _ = canonical_associate(z)
    assert z.b > 0 and z.norm() == p
    theta = z.arg()
    rec = PrimeSplitRecord(p, PrimeClass.SPLIT, z, theta, theta)
    _split_record_cache[p] = rec
    return rec


def prime_record(p: int) -> PrimeSplitRecord:
    """PrimeSplitRecord for any rational prime (all three classes)."""
    klass = classify_prime(p)
    if klass is PrimeClass.SPLIT:
        return split_prime_generator(p)
    if klass is PrimeClass.RAMIFIED:
        return PrimeSplitRecord(3, klass, PI3, math.pi / 6, -math.pi / 6)
    return PrimeSplitRecord(p, klass, None, 0.0, 0.0)


# ---------------------------------------------------------------------------
# factorization of integers over Z[w]


@dataclass(frozen=True)
class EisFactorization:
    """n = w^unit_power * pi_3^alpha3 * prod pi^e pibar^e' * prod q^e."""

    n: int
    unit_power: int
    alpha3: int
    split_factors: tuple[tuple[PrimeSplitRecord, int, int], ...]
    inert_factors: tuple[tuple[int, int], ...]

    def recompose(self) -> EisensteinInt:
        z = UNITS[self.unit_power] * PI3**self.alpha3
        for rec, e1, e2 in self.split_factors:
            assert rec.pi is not None
            z = z * rec.pi**e1 * eis_conj(rec.pi) ** e2
        for q, e in self.inert_factors:
            z = z * EisensteinInt(q, 0) ** e
        return z


def factor_eisenstein(n: int) -> EisFactorization:
    """Complete factorization of the rational integer n in Z[w].

    The embedded element is (n, 0), so 3^v contributes pi_3^(2v) and a
    unit power of v (from 3 = w * pi_3^2), while each split p^e
    contributes pi_p^e * conj(pi_p)^e with no unit.
    """
    if n < 1:
        raise ValueError("factor_eisenstein needs n >= 1")
    rational = factor_int(n)
    v3 = rational.pop(3, 0)
    split: list[tuple[PrimeSplitRecord, int, int]] = []
    inert: list[tuple[int, int]] = []
    for p in sorted(rational):
        e = rational[p]
        if p % 3 == 1:
            split.append((split_prime_generator(p), e, e))
        else:
            inert.append((p, e))
    fac = EisFactorization(n, v3 % 6, 2 * v3, tuple(split), tuple(inert))
    assert fac.recompose() == EisensteinInt(n, 0), f"recomposition failed for {n}"
    return fac


def r_q(n: int) -> int:
    """Number of lattice points on |mu|^2 = n."""
    if n < 1:
        raise ValueError("r_q needs n >= 1")
    count = 6
    for p, e in factor_int(n).items():
        if p == 3:
            continue
        if p % 3 == 1:
            count *= e + 1
        elif e % 2 == 1:
            return 0
    return count


# ---------------------------------------------------------------------------
# circle point sets


@dataclass(frozen=True)
class CirclePointSet:
    n: int
    points: tuple[EisensteinInt, ...]
    count: int


def _sorted_points(n: int, pts: set[EisensteinInt]) -> CirclePointSet:
    ordered = tuple(sorted(pts, key=lambda z: (z.arg(), z.a)))
    return CirclePointSet(n, ordered, len(ordered))


def circle_points(n: int) -> CirclePointSet:
    """All mu with |mu|^2 = n, from the factorization of n.

    Fix pi_3^(v_3(n)) times the inert part q^(e/2); for each split p^e
    choose pi_p^j * conj(pi_p)^(e-j), j = 0..e; multiply by the six
    units.  Points come out sorted by (angle, a).
    """
    if n < 1:
        raise ValueError("circle_points needs n >= 1")
    rational = factor_int(n)
    base = PI3 ** rational.get(3, 0)
    choices: list[list[EisensteinInt]] = []
    for p in sorted(rational):
        e = rational[p]
        if p == 3:
            continue
        if p % 3 == 1:
            pi = split_prime_generator(p).pi
            assert pi is not None
            choices.append([pi**j * eis_conj(pi) ** (e - j) for j in range(e + 1)])
        else:
            if e % 2 == 1:
                return CirclePointSet(n, (), 0)
            base = base * EisensteinInt(p, 0) ** (e // 2)
    partials = [base]
    for opts in choices:
        partials = [z * opt for z in partials for opt in opts]
    pts = {u * z for z in partials for u in UNITS}
    result = _sorted_points(n, pts)
    assert result.count == r_q(n)
    return result


def circle_points_bruteforce(n: int) -> CirclePointSet:
    """Independent oracle: solve a^2 + ab + b^2 = n for every b.

    For fixed b the equation is quadratic in a with discriminant
    4n - 3b^2, so each candidate is checked with integer square roots;
    no floating point is involved.
    """
    if n < 1:
        raise ValueError("circle_points_bruteforce needs n >= 1")
    if n > 10**8:
        raise ValueError("bruteforce capped at n <= 1e8")
    pts: set[EisensteinInt] = set()
    bmax = math.isqrt(4 * n // 3)
    for b in range(-bmax, bmax + 1):
        disc = 4 * n - 3 * b * b
        if disc < 0:
            continue
        t = math.isqrt(disc)
        if t * t != disc:
            continue
        for sign in (t, -t) if t else (0,):
            if (sign - b) % 2 == 0:
                z = EisensteinInt((sign - b) // 2, b)
                if z.norm() == n:
                    pts.add(z)
    return _sorted_points(n, pts)


# ---------------------------------------------------------------------------
# bulk lattice enumeration (shared by the statistics modules)


def iter_lattice_blocks(
    x: int, block_points: int = 1 << 19
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (norms, angles) arrays covering every nonzero point with
    norm <= x, each point exactly once.

    Rows are scanned in increasing a; for fixed a the admissible b form
    the integer interval [(-a - r)/2, (-a + r)/2] with r = isqrt(4x - 3a^2).
    """
    if x < 1:
        return
    amax = math.isqrt(4 * x // 3)
    buf_n: list[np.ndarray] = []
    buf_t: list[np.ndarray] = []
    size = 0
    for a in range(-amax, amax + 1):
        r = math.isqrt(4 * x - 3 * a * a)
        lo = -((a + r) // 2)  # ceil((-a - r)/2) in exact integers
        hi = (r - a) // 2  # floor((-a + r)/2)
        if hi < lo:
            continue
        b = np.arange(lo, hi + 1, dtype=np.int64)
        n = a * a + a * b + b * b
        keep = (n > 0) & (n <= x)
        if not keep.all():
            b = b[keep]
            n = n[keep]
        if len(n) == 0:
            continue
        t = np.arctan2(b * (SQRT3 / 2.0), a + b / 2.0)
        if a < 0:
            t[t == math.pi] = -math.pi  # match the scalar convention [-pi, pi)
        buf_n.append(n)
        buf_t.append(t)
        size += len(n)
        if size >= block_points:
            yield np.concatenate(buf_n), np.concatenate(buf_t)
            buf_n, buf_t, size = [], [], 0
    if size:
        yield np.concatenate(buf_n), np.concatenate(buf_t)


_lattice_cache: dict[str, tuple[int, np.ndarray, np.ndarray]] = {}


def lattice_norms_angles(x: int) -> tuple[np.ndarray, np.ndarray]:
    """All nonzero points of norm <= x as (norms, angles), sorted by
    (norm, angle).  Materialized and cached; keep x <= ~2e6."""
    if x > 4 * 10**6:
        raise ValueError("materialized enumeration capped at 4e6")
    cached = _lattice_cache.get("pts")
    if cached is not None and cached[0] >= x:
        cx, cn, ct = cached
        if cx == x:
            return cn, ct
        k = np.searchsorted(cn, x, side="right")
        return cn[:k], ct[:k]
    chunks = list(iter_lattice_blocks(x))
    if not chunks:
        return np.empty(0, dtype=np.int64), np.empty(0)
    norms = np.concatenate([c[0] for c in chunks])
    angles = np.concatenate([c[1] for c in chunks])
    order = np.lexsort((angles, norms))
    norms, angles = norms[order], angles[order]
    _lattice_cache["pts"] = (x, norms, angles)
    return norms, angles


_split_angle_cache: dict[str, tuple[int, np.ndarray, np.ndarray]] = {}


def split_prime_angles(x: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays (p, theta_p) for every split prime p <= x, sorted by p.

    Enumerates pairs a > b >= 1 whose norm is a prime <= x; each split
    prime has exactly one such representative, and its angle is the
    canonical theta_p in (0, pi/6).  Primality is a sieve lookup.
    """
    if x > 10**8:
        raise ValueError("split prime enumeration capped at 1e8")
    cached = _split_angle_cache.get("sp")
    if cached is not None and cached[0] >= x:
        cx, cp, ct = cached
        if cx == x:
            return cp, ct
        k = np.searchsorted(cp, x, side="right")
        return cp[:k], ct[:k]
    tbl = _prime_table(x)
    ps: list[np.ndarray] = []
    ts: list[np.ndarray] = []
    amax = math.isqrt(4 * x // 3)
    for a in range(2, amax + 1):
        b = np.arange(1, a, dtype=np.int64)
        n = a * a + a * b + b * b
        keep = n <= x
        b, n = b[keep], n[keep]
        if len(n) == 0:
            continue
        pm = tbl[n]
        if not pm.any():
            continue
        b, n = b[pm], n[pm]
        ps.append(n)
        ts.append(np.arctan2(b * (SQRT3 / 2.0), a + b / 2.0))
    if ps:
        p_all = np.concatenate(ps)
        t_all = np.concatenate(ts)
        order = np.argsort(p_all, kind="stable")
        p_all, t_all = p_all[order], t_all[order]
    else:
        p_all = np.empty(0, dtype=np.int64)
        t_all = np.empty(0)
    if x <= 4 * 10**6:  # keep the cache bounded
        _split_angle_cache["sp"] = (x, p_all, t_all)
    return p_all, t_all
