"""Teichmueller lifts, logarithms, Frobenius and roots of unity."""

from __future__ import annotations

from math import isqrt

from ..errors import NotAUnit, NotOrdinary, PDividesN
from . import fpoly
from .scalar import PadicScalar, split_p
from .unramified import UnramifiedRing, UnramifiedScalar, unramified_ring


def _as_raw(z):
    """(ring, coeffs, prec) for a PadicScalar or UnramifiedScalar."""
    if isinstance(z, PadicScalar):
        if not z.is_integral():
            raise NotAUnit("expected an integral p-adic number")
        return unramified_ring(z.p, 1), (z.residue,), z.prec
    if isinstance(z, UnramifiedScalar):
        return z.ring, z.coeffs, z.prec
    raise TypeError(f"not a p-adic element: {z!r}")


def _wrap(ring: UnramifiedRing, coeffs, prec: int, like):
    if isinstance(like, PadicScalar):
        return PadicScalar(ring.p, prec, coeffs[0])
    return UnramifiedScalar(ring, prec, tuple(coeffs))


def _floor_log(n: int, p: int) -> int:
    e = 0
    while p ** (e + 1) <= n:
        e += 1
    return e


def log_one_unit_raw(ring: UnramifiedRing, u, k: int) -> tuple[int, ...]:
    """log(u) modulo p^k for u = 1 mod p, given u modulo p^k.

    u is first raised to p^j so that the series converges quickly; the
    result is divided by p^j at the end.
    """
    p, f = ring.p, ring.f
    j = max(1, isqrt(k))
    w = k + j
    vy = j + 1
    # n*vy - floor(log_p n) is nondecreasing, so stop at its first crossing
    n_max = 1
    while n_max * vy - _floor_log(n_max, p) < w:
        n_max += 1
    big = p ** (w + _floor_log(n_max, p))
    v = ring.pow_raw(tuple(x % big for x in u), p**j, big)
    y = ((v[0] - 1) % big,) + tuple(v[1:])
    total = [0] * f
    power = y
    for n in range(1, n_max):
        e, unit = split_p(n, p)
        pe = p**e
        inv = pow(unit, -1, big)
        sign = 1 if n % 2 else -1
        for i, c in enumerate(power):
            total[i] += sign * (c // pe) * inv
        power = ring.mul_raw(power, y, big)
    m = p**w
    pj = p**j
    total = [t % m for t in total]
    assert all(t % pj == 0 for t in total)
    mk = p**k
    return tuple((t // pj) % mk for t in total)


def teichmuller(z):
    """The root of unity congruent to a unit z modulo p.

    EXAMPLES::

        >>> teichmuller(PadicScalar(5, 2, 2)).residue
        7
    """
    ring, c, k = _as_raw(z)
    m = ring.p**k
    if not ring.is_unit_raw(c):
        raise NotAUnit("the Teichmuller lift needs a unit")
    return _wrap(ring, ring.pow_raw(c, ring.q ** (k - 1), m), k, z)


def frobenius(z):
    if isinstance(z, PadicScalar):
        return z
    return z.frobenius()


def _unit_part(ring, c, k):
    """Write c = p^v * u and return (v, u) with u known modulo p^(k-v)."""
    p = ring.p
    v = 0
    while not ring.is_unit_raw(c):
        if not any(c):
            raise NotAUnit("logarithm of zero")
        c = tuple(x // p for x in c)
        v += 1
    return v, c


def iwasawa_log(z):
    """Iwasawa logarithm: log p = 0 and log of roots of unity is 0."""
    ring, c, k = _as_raw(z)
    p = ring.p
    v, u = _unit_part(ring, c, k)
    k -= v
    if k < 1:
        raise NotAUnit("no digits of the unit part are known")
    if p == 2:
        sq = ring.mul_raw(u, u, 2 ** (k + 1))
        w = ring.pow_raw(sq, ring.q - 1, 2 ** (k + 1))
        lg = log_one_unit_raw(ring, w, k + 1)
        inv = pow(ring.q - 1, -1, 2 ** (k + 1))
        if any(x % 2 for x in lg):
            raise ArithmeticError("log of a square should be even")
        out = tuple(((x // 2) * inv) % 2**k for x in lg)
    else:
        m = p**k
        w = ring.pow_raw(u, ring.q - 1, m)
        lg = log_one_unit_raw(ring, w, k)
        inv = pow(ring.q - 1, -1, m)
        out = tuple(x * inv % m for x in lg)
    return _wrap(ring, out, k, z)


def log_p_twisted(z):
    """(1/p) log(z^p / F(z)) for a unit z; the result loses one digit."""
    ring, c, k = _as_raw(z)
    p = ring.p
    if not ring.is_unit_raw(c):
        raise NotAUnit("log_p_twisted needs a unit")
    m = p**k
    zp = ring.pow_raw(c, p, m)
    fz = ring.frobenius_raw(c, k)
    u = ring.mul_raw(zp, ring.inv_raw(fz, k), m)
    lg = log_one_unit_raw(ring, u, k)
    if any(x % p for x in lg):
        raise ArithmeticError("log of a one-unit should be divisible by p")
    return _wrap(ring, tuple(x // p for x in lg), k - 1, z)


def multiplicative_order(n: int, N: int) -> int:
    """Order of n modulo N."""
    if N == 1:
        return 1
    e, x = 1, n % N
    while x != 1:
        x = x * n % N
        e += 1
    return e


def primitive_root_of_unity(N: int, p: int, K: int) -> UnramifiedScalar:
    """A primitive N-th root of unity in the smallest Z_q containing one."""
    if N % p == 0:
        raise PDividesN(f"{p} divides {N}")
    f = multiplicative_order(p, N)
    ring = unramified_ring(p, f)
    q = p**f
    g = list(ring.modulus)
    exps = [N // ell for ell in fpoly.prime_factors(N)] if N > 1 else []
    index = 1
    while True:
        # candidates run through the nonzero elements of F_q in a fixed order
        digits, n = [], index
        for _ in range(f):
            n, d = divmod(n, p)
            digits.append(d)
        index += 1
        if not any(digits):
            continue
        z = fpoly.powmod(fpoly.trim(digits[:]), (q - 1) // N, g, p)
        if all(fpoly.powmod(z, e, g, p) != [1] for e in exps):
            zz = tuple(z + [0] * (f - len(z)))
            lifted = ring.pow_raw(zz, q ** (K - 1), p**K)
            return UnramifiedScalar(ring, K, lifted)


def roots_of_unity(N: int, p: int, K: int) -> list:
    """All N-th roots of unity, sorted by their coordinate vectors.

    When N divides p - 1 they lie in Z_p and are returned as PadicScalar.

    EXAMPLES::

        >>> [r.residue for r in roots_of_unity(2, 5, 3)]
        [1, 124]
    """
    zeta = primitive_root_of_unity(N, p, K)
    powers = [zeta.ring.one(K)]
    for _ in range(N - 1):
        powers.append(powers[-1] * zeta)
    powers.sort(key=lambda r: r.coeffs)
    if zeta.f == 1:
        return [r.to_padic() for r in powers]
    return powers


def hensel_quadratic_unit_root(a_p: int, p: int, K: int) -> PadicScalar:
    """The unit root of T^2 - a_p T + p, by Newton iteration from a_p mod p.

    EXAMPLES::

        >>> a = hensel_quadratic_unit_root(2, 7, 4)
        >>> ((a * a) - 2 * a + 7).residue
        0
    """
    if a_p % p == 0:
        raise NotOrdinary(f"a_p = {a_p} is divisible by {p}")
    m = p**K
    x = a_p % p
    prec = 1
    while prec < K:
        prec = min(2 * prec, K)
        mm = p**prec
        fx = (x * x - a_p * x + p) % mm
        dfx = (2 * x - a_p) % mm
        x = (x - fx * pow(dfx, -1, mm)) % mm
    return PadicScalar(p, K, x % m)
