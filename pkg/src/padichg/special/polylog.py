"""The p-adic polylogarithm with the multiples of p removed,

    ln_r(x) = lim_s (1 - x^(p^s))^(-1) sum_{1 <= k < p^s, p does not divide k} x^k / k^r,

for units x with x - 1 also a unit.
"""

from __future__ import annotations

from functools import lru_cache

from ..core import (
    PadicScalar,
    UnramifiedScalar,
    iwasawa_log,
    lift_to_ring,
    split_p,
    teichmuller,
    unramified_ring,
)
from ..core.fpoly import prime_factors
from ..errors import NotAUnit, XCongruentOne
from .sums import progression_power_sums


def limit_level(K: int, p: int) -> int:
    """Truncation level s used for a K-digit polylog."""
    return K + 1 + (1 if p == 2 else 0)


def _as_element(x, p, K):
    if isinstance(x, UnramifiedScalar):
        return x if K is None else x.reduce(K)
    if isinstance(x, PadicScalar):
        return lift_to_ring(x, unramified_ring(x.p, 1), K)
    if p is None or K is None:
        raise ValueError("p and K are required for an exact argument")
    return lift_to_ring(x, unramified_ring(p, 1), K)


def _check_domain(x: UnramifiedScalar):
    if not x.is_unit():
        raise NotAUnit("the polylogarithm needs a unit argument")
    if not (x - 1).is_unit():
        raise XCongruentOne("x is congruent to 1 modulo p")


def _finish(value: UnramifiedScalar, like):
    if isinstance(like, UnramifiedScalar) and like.f > 1:
        return value
    return value.to_padic()


def root_order(x: UnramifiedScalar) -> int | None:
    """Multiplicative order of x if it is a root of unity of order prime to p."""
    q = x.ring.q
    one = x.ring.one(x.prec)
    if not (x ** (q - 1)).agrees(one):
        return None
    n = q - 1
    for ell in prime_factors(q - 1):
        while n % ell == 0 and (x ** (n // ell)).agrees(one):
            n //= ell
    return n


def polylog_root_of_unity(r: int, eps: UnramifiedScalar, N: int, K: int) -> UnramifiedScalar:
    """ln_r at a root of unity of order N, via exact progression sums."""
    p = eps.p
    s = limit_level(K, p)
    T = progression_power_sums(p**s, -r, p, N, s)
    eps = eps.reduce(K)
    acc = eps.ring.zero(K)
    power = eps.ring.one(K)
    for u in range(N):
        acc = acc + power * T[u]
        power = power * eps
    return acc / (1 - eps ** (p**s))


@lru_cache(maxsize=None)
def _theta_numerator(m: int) -> tuple[int, ...]:
    """Integer polynomial P with sum_{k>=1} k^m x^k = P(x) / (1 - x)^(m+1)."""
    P = [0, 1]
    for j in range(1, m + 1):
        # theta(P / (1-x)^j) = (x P' (1 - x) + j x P) / (1 - x)^(j+1)
        dP = [i * P[i] for i in range(1, len(P))] + [0]
        xdP = [0] + dP
        out = [0] * (len(P) + 2)
        for i, c in enumerate(xdP):
            out[i] += c
            out[i + 1] -= c
        for i, c in enumerate(P):
            out[i + 1] += j * c
        while out and out[-1] == 0:
            out.pop()
        P = out
    return tuple(P)


def _eval_poly(coeffs, x: UnramifiedScalar) -> UnramifiedScalar:
    acc = x.ring.zero(x.prec)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def polylog_nonpositive(m: int, x: UnramifiedScalar) -> UnramifiedScalar:
    """ln_{-m}(x) = L_m(x) - p^m L_m(x^p) with L_m(x) = sum_{k>=1} k^m x^k."""
    P = _theta_numerator(m)
    p = x.p

    def full(y):
        return _eval_poly(P, y) / (1 - y) ** (m + 1)

    return full(x) - full(x**p) * p**m


def _polylog_expansion(r: int, x: UnramifiedScalar, K: int) -> UnramifiedScalar:
    """ln_r(x) = sum_j L^j / j! ln_{r-j}(omega(x)) with L = log(x / omega(x))."""
    p, ring = x.p, x.ring
    omega = teichmuller(x)
    N = root_order(omega)
    # v(L^j / j!) >= j - (j - 1)/(p - 1); stop once this reaches K
    J = 0
    while J - (J - 1) / (p - 1) < K:
        J += 1
    big = p ** (K + J)
    mk = p**K
    L = iwasawa_log(x).coeffs
    acc = ring.zero(K)
    power = (1,) + (0,) * (ring.f - 1)
    fact_v, fact_u = 0, 1
    for j in range(J + 1):
        if j > 0:
            power = ring.mul_raw(power, L, big)
            v, u = split_p(j, p)
            fact_v += v
            fact_u *= u
        pv = p**fact_v
        inv = pow(fact_u, -1, mk)
        term = UnramifiedScalar(ring, K, tuple((c // pv) * inv for c in power))
        if r - j <= 0:
            ln = polylog_nonpositive(j - r, omega)
        else:
            ln = polylog_root_of_unity(r - j, omega, N, K)
        acc = acc + term * ln
    return acc


def polylog_limit(r: int, x: UnramifiedScalar, s: int) -> UnramifiedScalar:
    """The level-s truncation of the defining limit, summed term by term."""
    p = x.p
    prec = min(s, x.prec)
    x = x.reduce(prec)
    m = p**prec
    acc = x.ring.zero(prec)
    power = x.ring.one(prec)
    for k in range(1, p**s):
        power = power * x
        if k % p:
            coef = pow(pow(k, -1, m), r, m) if r > 0 else pow(k, -r, m)
            acc = acc + power * coef
    return acc / (1 - x ** (p**s))


def polylog(r: int, x, K: int | None = None, *, p: int | None = None, method: str = "auto"):
    """ln_r(x) for a unit x with x - 1 a unit.

    ``method`` is "auto" (the fastest exact route) or "limit" (direct
    summation of the defining limit at level K + 1; cost p^(K+1)).

    EXAMPLES::

        >>> polylog(0, 2, 4, p=5).residue == (-1 + pow(31, -1, 625)) % 625
        True
    """
    el = _as_element(x, p, K)
    _check_domain(el)
    K = el.prec if K is None else min(K, el.prec)
    like = x
    if method == "limit":
        return _finish(polylog_limit(r, el, limit_level(K, el.p)).reduce(K), like)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    N = root_order(el)
    if N is not None:
        return _finish(polylog_root_of_unity(r, el, N, K), like)
    if r <= 0:
        return _finish(polylog_nonpositive(-r, el).reduce(K), like)
    if el.p == 2:
        return _finish(polylog_limit(r, el, limit_level(K, 2)).reduce(K), like)
    return _finish(_polylog_expansion(r, el, K), like)
