"""Kubota-Leopoldt values L_p(r, omega^(1-r)) at integers r != 1."""

from __future__ import annotations

from fractions import Fraction

from ..core import PadicScalar, primitive_root_of_unity, split_p
from ..errors import NoValidN, RIsOne
from .bernoulli import bernoulli
from .polylog import polylog_root_of_unity


def _euler_factor_valuation(N: int, r: int, p: int) -> int | None:
    """v_p(1 - N^(1-r)); None when it vanishes."""
    x = 1 - Fraction(N) ** (1 - r)
    if x == 0:
        return None
    return split_p(x.numerator, p)[0]


def choose_auxiliary_n(r: int, p: int, bound: int = 400) -> tuple[int, int]:
    """Smallest N >= 2 prime to p minimising v_p(1 - N^(1-r)).

    A unit is found unless (p - 1) divides 1 - r; then the minimum is
    1 + v_p(1 - r) (attained at a primitive root modulo p^2).
    """
    best = None
    for N in range(2, bound):
        if N % p == 0:
            continue
        v = _euler_factor_valuation(N, r, p)
        if v is None:
            continue
        if best is None or v < best[1]:
            best = (N, v)
            if v == 0:
                break
    if best is None:
        raise NoValidN(f"no auxiliary N found for r={r}, p={p}")
    return best


def _route_a(r: int, p: int, K: int, N: int) -> PadicScalar:
    v = _euler_factor_valuation(N, r, p)
    if v is None:
        raise NoValidN(f"1 - N^(1-r) vanishes for N={N}")
    W = K + v
    zeta = primitive_root_of_unity(N, p, W)
    total = zeta.ring.zero(W)
    eps = zeta
    for _ in range(N - 1):
        total = total + polylog_root_of_unity(r, eps, N, W)
        eps = eps * zeta
    s = total.to_padic()
    factor = 1 - Fraction(N) ** (1 - r)
    unit = factor / Fraction(p) ** v
    value = (-s / PadicScalar.from_rational(unit, p, W)).scale(-v)
    return value.reduce(K)


def kubota_leopoldt(r: int, p: int, K: int, *, route: str = "A", N: int | None = None) -> PadicScalar:
    """L_p(r, omega^(1-r)).

    Route "A" sums the polylogarithm over the nontrivial N-th roots of
    unity and divides by -(1 - N^(1-r)). Route "B" (r <= 0 only) uses
    the Bernoulli number formula -(1 - p^m) B_{m+1} / (m + 1), m = -r.

    EXAMPLES::

        >>> kubota_leopoldt(-1, 5, 4, route="B") == PadicScalar.from_rational(Fraction(1, 3), 5, 4)
        True
    """
    if r == 1:
        raise RIsOne("L_p has a pole at s = 1")
    if route == "B":
        if r > 0:
            raise ValueError("the Bernoulli route only covers r <= 0")
        m = -r
        value = -(1 - Fraction(p) ** m) * bernoulli(m + 1) / (m + 1)
        return PadicScalar.from_rational(value, p, K)
    if route != "A":
        raise ValueError(f"unknown route {route!r}")
    if N is None:
        N, _ = choose_auxiliary_n(r, p)
    elif N % p == 0:
        raise NoValidN(f"N={N} is divisible by p")
    return _route_a(r, p, K, N)


def kubota_leopoldt_limit(r: int, p: int, n: int, K: int) -> PadicScalar:
    """The level-n approximation (1/(r-1)) p^(-n) sum_{k<p^n, p !| k} k^(1-r),
    summed term by term. Intended as a cross-check at small n."""
    if r == 1:
        raise RIsOne("L_p has a pole at s = 1")
    v_r, u_r = split_p(r - 1, p)
    W = K + n + v_r
    m = p**W
    e = 1 - r
    total = 0
    for k in range(1, p**n):
        if k % p:
            total += pow(k, e, m) if e >= 0 else pow(pow(k, -1, m), -e, m)
    value = PadicScalar(p, W, total).scale(-n) / PadicScalar(p, W, u_r)
    return value.scale(-v_r)
