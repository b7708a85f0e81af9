"""Coefficients A_n of F_a(t) and B_n of the logarithmic-type series G_a(t)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from ..core import PadicScalar, iwasawa_log, split_p
from ..errors import DivisionNotExact
from ..special import psi_tilde
from .params import HGParams, dwork_prime
from .series import TruncatedSeries


def hg_coeffs_exact(a, D: int) -> list[Fraction]:
    """A_0..A_D as exact rationals, A_n = A_{n-1} prod_i (a_i + n - 1) / n.

    EXAMPLES::

        >>> hg_coeffs_exact((Fraction(1, 2), Fraction(1, 2)), 2)
        [Fraction(1, 1), Fraction(1, 4), Fraction(9, 64)]
    """
    out = [Fraction(1)]
    for n in range(1, D + 1):
        x = out[-1]
        for ai in a:
            x *= ai + n - 1
        out.append(x / n ** len(a))
    return out


def _hg_stream(a: tuple[Fraction, ...], p: int, D: int, W: int) -> Iterator[int]:
    """A_0..A_D modulo p^W, tracking the p-adic valuation separately so
    that no digits are lost when factors of p appear and cancel."""
    m = p**W
    nums = [(x.numerator, x.denominator) for x in a]
    den_all = 1
    for _, d in nums:
        den_all *= d
    val = 0
    unit = 1
    s = len(a)
    yield 1
    for n in range(1, D + 1):
        num_unit = 1
        for u, d in nums:
            x = u + (n - 1) * d
            if x % p:
                num_unit *= x
            else:
                v, w = split_p(x, p)
                val += v
                num_unit *= w
        if n % p:
            den_unit = den_all * n**s
        else:
            v, w = split_p(n, p)
            val -= s * v
            den_unit = den_all * w**s
        unit = unit * num_unit * pow(den_unit, -1, m) % m
        if val < 0:
            raise DivisionNotExact(f"A_{n} is not a p-adic integer")
        yield unit * p**val % m if val < W else 0


@lru_cache(maxsize=16)
def hg_residues(a: tuple[Fraction, ...], p: int, D: int, W: int) -> tuple[int, ...]:
    """A_0..A_D modulo p^W as a tuple of integers."""
    return tuple(_hg_stream(a, p, D, W))


def hg_coeffs(a, D: int, K: int, p: int) -> TruncatedSeries:
    """F_a(t) modulo t^(D+1) with coefficients modulo p^K."""
    params = HGParams(tuple(a), p)
    return TruncatedSeries(p, K, hg_residues(params.a, p, D, K))


def floor_log(n: int, p: int) -> int:
    e = 0
    while p ** (e + 1) <= n:
        e += 1
    return e


def guard_digits(D: int, p: int) -> int:
    """ceil(log_p D) + 2 guard digits for coefficients up to degree D."""
    e = 0
    while p**e < D:
        e += 1
    return e + 2


def b0_value(params: HGParams, K: int) -> PadicScalar:
    """B_0 = sum_i psi_tilde(a_i) - log(c)/p; the gamma_p terms cancel."""
    p = params.p
    total = PadicScalar(p, K, 0)
    for x in params.a:
        total = total + psi_tilde(0, x, K, p=p)
    c = params.c_scalar(K + 1 + (1 if p == 2 else 0))
    lg = iwasawa_log(c)
    if lg.residue % p:
        raise DivisionNotExact("log of the twist is not divisible by p")
    return total - PadicScalar(p, lg.prec - 1, lg.residue // p)


def g_residues(params: HGParams, D: int, W: int, A: tuple[int, ...] | None = None) -> tuple[int, ...]:
    """B_1..B_D (index 0 left as 0) modulo p^(W - floor(log_p D)).

    A may be passed in when A_0..A_D modulo p^W are already known.
    """
    p = params.p
    kmax = floor_log(D, p)
    out_prec = W - kmax
    if out_prec < 1:
        raise ValueError("working precision too small for the requested degree")
    m = p**W
    mo = p**out_prec
    if A is None:
        A = hg_residues(params.a, p, D, W)
    Ap = hg_residues(params.primed, p, D // p, W)
    c = params.c_residue(W)
    cpow = [1]
    for _ in range(D // p):
        cpow.append(cpow[-1] * c % m)
    out = [0]
    for n in range(1, D + 1):
        if n % p:
            out.append(A[n] * pow(n, -1, mo) % mo)
            continue
        k, u = split_p(n, p)
        j = n // p
        diff = (A[n] - cpow[j] * Ap[j]) % m
        pk = p**k
        if diff % pk:
            raise DivisionNotExact(f"B_{n}: numerator not divisible by p^{k}")
        out.append((diff // pk) * pow(u, -1, mo) % mo)
    return tuple(out)


def g_coeffs(params: HGParams, D: int, K: int) -> TruncatedSeries:
    """G_a(t) modulo t^(D+1), coefficients modulo p^K."""
    p = params.p
    W = K + guard_digits(D, p)
    B = list(g_residues(params, D, W))
    B[0] = b0_value(params, K).residue
    return TruncatedSeries(p, K, tuple(B))


def g_coeffs_exact(params: HGParams, D: int) -> list[Fraction]:
    """B_1..B_D as exact rationals (B_0, which is transcendental, is None).
    Requires a rational twist."""
    if isinstance(params.c, PadicScalar):
        raise ValueError("exact coefficients need a rational twist")
    p = params.p
    A = hg_coeffs_exact(params.a, D)
    Ap = hg_coeffs_exact(params.primed, D // p)
    out: list = [None]
    for n in range(1, D + 1):
        if n % p:
            out.append(A[n] / n)
        else:
            out.append((A[n] - params.c ** (n // p) * Ap[n // p]) / n)
    return out


__all__ = [
    "b0_value",
    "dwork_prime",
    "g_coeffs",
    "g_coeffs_exact",
    "g_residues",
    "guard_digits",
    "hg_coeffs",
    "hg_coeffs_exact",
    "hg_residues",
]
