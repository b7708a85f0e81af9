"""Euler's constant, the digamma and polygamma functions, and their
Volkenborn integral representations."""

from __future__ import annotations

from fractions import Fraction

from ..core import PadicScalar, embed_rational, iwasawa_log, primitive_root_of_unity, split_p
from ..core.unramified import lift_to_ring
from ..errors import PDividesN, PrecisionError
from .lfunction import kubota_leopoldt
from .polylog import polylog_nonpositive, polylog_root_of_unity
from .sums import unit_log_sum, unit_power_sum


def gamma_level(K: int, p: int) -> int:
    """Level s for Euler's constant and the Volkenborn integrals."""
    return K + 2 + (1 if p == 2 else 0)


def psi_level(K: int, p: int) -> int:
    """Level s for the partial-sum digamma: n = z mod p^s."""
    return K + 1 + (1 if p == 2 else 0)


def euler_gamma(p: int, K: int, *, s: int | None = None, method: str = "blocks") -> PadicScalar:
    """gamma_p = -lim_s p^(-s) sum_{0 <= j < p^s, p !| j} log j at level s.

    ``method="blocks"`` evaluates the level-s sum exactly through power
    sums; ``method="product"`` takes one logarithm of the product of all
    units below p^s, which costs p^s multiplications.
    """
    if s is None:
        s = gamma_level(K, p)
    W = s + K
    if method == "blocks":
        total = unit_log_sum(p**s, p, W)
    elif method == "product":
        m = p ** W
        prod = 1
        for j in range(1, p**s):
            if j % p:
                prod = prod * j % m
        total = iwasawa_log(PadicScalar(p, W, prod)).residue
    else:
        raise ValueError(f"unknown method {method!r}")
    return PadicScalar(p, W, -total).scale(-s)


def _representative(z, p: int, s: int) -> tuple[int, int]:
    """Positive integer n = z mod p^s, and the number of digits of z known."""
    if isinstance(z, PadicScalar):
        if not z.is_integral():
            raise ValueError("argument must lie in Z_p")
        known = z.prec
        n = z.residue % p ** min(s, known)
    else:
        known = s
        n = embed_rational(z, p, s).residue
    if n == 0:
        n = p ** min(s, known)
    return n, known


def psi_tilde(r: int, z, K: int, *, p: int | None = None) -> PadicScalar:
    """lim_{n -> z} sum_{1 <= k < n, p !| k} k^(-(r+1)) over positive integers n.

    EXAMPLES::

        >>> psi_tilde(0, 2, 5, p=7).residue
        1
    """
    if isinstance(z, PadicScalar):
        p = z.p
    s = psi_level(K, p)
    n, known = _representative(z, p, s)
    prec = K
    if known < s:
        prec = min(K, known - 1)
        if prec < 1:
            raise PrecisionError("argument known to too few digits")
    return PadicScalar(p, prec, unit_power_sum(n, -(r + 1), p, prec))


def psi_tilde_rational(r: int, n: int, N: int, p: int, K: int) -> PadicScalar:
    """psi_tilde^(r)(n/N) = N^r sum_{eps in mu_N, eps != 1} (1 - eps^(-n)) ln_{r+1}(eps)."""
    if N % p == 0:
        raise PDividesN(f"{p} divides {N}")
    if N == 1:
        return PadicScalar(p, K, 0)
    W = K + 1
    zeta = primitive_root_of_unity(N, p, W)
    ring = zeta.ring
    total = ring.zero(W)
    eps = zeta
    for j in range(1, N):
        if r + 1 <= 0:
            ln = polylog_nonpositive(-(r + 1), eps)
        else:
            ln = polylog_root_of_unity(r + 1, eps, N, W)
        total = total + (1 - zeta ** ((-n * j) % N)) * ln
        eps = eps * zeta
    factor = Fraction(N) ** r
    return (total * lift_to_ring(factor, ring, W)).to_padic().reduce(K)


def polygamma(r: int, z, K: int, *, p: int | None = None, lp_route: str = "A") -> PadicScalar:
    """psi_p^(r)(z): -gamma_p + psi_tilde^(0)(z) for r = 0 and
    -L_p(1 + r, omega^(-r)) + psi_tilde^(r)(z) otherwise."""
    if isinstance(z, PadicScalar):
        p = z.p
    tilde = psi_tilde(r, z, K, p=p)
    if r == 0:
        const = euler_gamma(p, K)
    else:
        const = kubota_leopoldt(1 + r, p, K, route=lp_route)
    return tilde - const


def volkenborn_psi(r: int, z, K: int, *, p: int | None = None, s: int | None = None) -> PadicScalar:
    """Volkenborn integral of log(z+t) (r = 0) or -(1/r)(z+t)^(-r) (r != 0)
    over t in Z_p, restricted to z + t a unit, at level s."""
    if isinstance(z, PadicScalar):
        p = z.p
    v_r, u_r = split_p(r, p) if r else (0, 1)
    if s is None:
        s = gamma_level(K, p) + v_r
    W = s + K + v_r
    if isinstance(z, PadicScalar):
        if not z.is_integral():
            raise ValueError("argument must lie in Z_p")
        n = z.residue
        out_prec = min(K, z.prec - 1)
        if out_prec < 1:
            raise PrecisionError("argument known to too few digits")
    else:
        n = embed_rational(z, p, W).residue
        out_prec = K
    L = p**s
    if r == 0:
        total = unit_log_sum(n + L, p, W) - unit_log_sum(n, p, W)
        return PadicScalar(p, W, total).scale(-s).reduce(out_prec)
    total = unit_power_sum(n + L, -r, p, W) - unit_power_sum(n, -r, p, W)
    value = PadicScalar(p, W, -total).scale(-s) / PadicScalar(p, W, u_r)
    return value.scale(-v_r).reduce(out_prec)
