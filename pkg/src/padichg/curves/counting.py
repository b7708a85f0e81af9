"""Point counts of elliptic and hypergeometric curves over finite fields."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from ..errors import DomainError, OutsideDomain, PDividesN
from .ffield import finite_field


def legendre_symbol(x: int, p: int) -> int:
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class LegendreCurve:
    """y^2 = x(1 - x)(1 - a x) over F_p."""

    p: int
    a: int

    def __post_init__(self):
        if self.p <= 3:
            raise DomainError("need p > 3")
        a = self.a % self.p
        if a in (0, 1):
            raise OutsideDomain("a must avoid 0 and 1 mod p")
        object.__setattr__(self, "a", a)


def count_cubic(p: int, cubic, k: int = 1) -> tuple[int, int]:
    """Projective count of k y^2 = cubic(x) over F_p and its trace a_p.

    ``cubic`` is a coefficient list, constant term first.
    """
    total = 1
    for x in range(p):
        v = 0
        for c in reversed(cubic):
            v = (v * x + c) % p
        total += 1 + legendre_symbol(v * k, p)
    return total, p + 1 - total


def count_legendre(curve: LegendreCurve) -> tuple[int, int]:
    """(#E(F_p), a_p) for the Legendre curve.

    EXAMPLES::

        >>> count_legendre(LegendreCurve(5, 2))
        (8, -2)
    """
    p, a = curve.p, curve.a
    # x(1-x)(1-ax) = x - (1+a) x^2 + a x^3
    return count_cubic(p, [0, 1, -(1 + a), a])


@dataclass(frozen=True)
class HGCurveSpec:
    """(1 - x^N)(1 - y^M) = t0 over F_p."""

    N: int
    M: int
    p: int
    t0: int

    def __post_init__(self):
        if self.N < 2 or self.M < 2:
            raise DomainError("N and M must be at least 2")
        if (self.N * self.M) % self.p == 0:
            raise PDividesN("p must not divide NM")
        t0 = self.t0 % self.p
        if t0 in (0, 1):
            raise OutsideDomain("t0 must avoid 0 and 1 mod p")
        object.__setattr__(self, "t0", t0)

    @property
    def genus(self) -> int:
        return (self.N - 1) * (self.M - 1)


def count_hg_curve(spec: HGCurveSpec, e: int = 1) -> int:
    """Points of the smooth projective model over F_{p^e}.

    Affine solutions of (1 - x^N)(1 - y^M) = t0, plus the x^N = 1 points
    with y at infinity and the y^M = 1 points with x at infinity.
    """
    F = finite_field(spec.p, e)
    q1 = F.q - 1
    dN, dM = gcd(spec.N, q1), gcd(spec.M, q1)
    exp, log = F.exp, F.log
    log_t0 = log[spec.t0]
    # number of y in F_q with y^M = w, indexed by code of w
    def m_roots(w: int) -> int:
        if w == 0:
            return 1
        return dM if log[w] % dM == 0 else 0

    affine = 0
    for x in range(F.q):
        xn = 0 if x == 0 else exp[log[x] * spec.N % q1]
        v = F.add_int(F.neg(xn), 1)
        if v == 0:
            continue
        ratio = exp[(log_t0 - log[v]) % q1]
        affine += m_roots(F.add_int(F.neg(ratio), 1))
    return affine + dN + dM


def weil_bound_ok(count: int, q: int, genus: int) -> bool:
    """|count - (q + 1)| <= 2 g sqrt(q), checked in integers."""
    d = abs(count - q - 1)
    return d * d <= 4 * genus * genus * q


def hasse_bound_ok(a_p: int, p: int) -> bool:
    return a_p * a_p <= 4 * p and abs(a_p) <= 2 * isqrt(p) + 1
