"""Elliptic families tied to 2F1 parameters, the Fermat special values at
t = 1, and the non-vanishing experiment for G(1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core import PadicScalar, embed_rational, fpoly, hensel_quadratic_unit_root, parse_rational
from ..errors import DomainError, OutsideDomain
from ..hypergeo import HGParams, dwork_orbit, g_coeffs, logtype_eval
from ..hypergeo.evaluate import gauss_mod_p
from .counting import count_cubic

HALF = Fraction(1, 2)


def _legendre_model(a):
    b = 1 - a
    return 1, [0, 1, -(1 + b), b]


def _sextic_model(a):
    return 3, [1 - a, 0, -3, 2]


def _cubic_model(a):
    return 1, [16 * a * a, 24 * a, 9, 1]


def _quartic_model(a):
    return 1, [0, 1 - a, -2, 1]


# name -> (hypergeometric parameters, Weierstrass model k y^2 = cubic(x))
FAMILIES = {
    "legendre": ((HALF, HALF), _legendre_model),
    "1/6,5/6": ((Fraction(1, 6), Fraction(5, 6)), _sextic_model),
    "1/3,2/3": ((Fraction(1, 3), Fraction(2, 3)), _cubic_model),
    "1/4,3/4": ((Fraction(1, 4), Fraction(3, 4)), _quartic_model),
}


def family_curve(family: str, a, p: int) -> tuple[int, list[int]]:
    """The model of the fiber at a, reduced mod p; raises DomainError on
    bad reduction."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    a = parse_rational(a)
    k, cubic = FAMILIES[family][1](a)
    k_mod = embed_rational(Fraction(k), p, 1).residue
    cub = [embed_rational(Fraction(c), p, 1).residue for c in cubic]
    if k_mod == 0 or cub[3] == 0:
        raise DomainError(f"bad reduction of the {family} fiber at {p}")
    g = fpoly.gcd(cub, fpoly.derivative(cub, p), p)
    if len(fpoly.trim(g)) > 1:
        raise DomainError(f"the {family} fiber at a={a} has bad reduction at {p}")
    return k_mod, cub


def family_unit_root(family: str, a, p: int, K: int) -> tuple[int, PadicScalar]:
    k, cub = family_curve(family, a, p)
    _, a_p = count_cubic(p, cub, k)
    return a_p, hensel_quadratic_unit_root(a_p, p, K)


def conjecture_lhs(family: str, a, p: int, K: int, *, i=None, N=None, j=None, M=None) -> PadicScalar:
    """(1 - p / alpha) F^(sigma_a)(a) with sigma_a(t) = a^(1-p) t^p and
    alpha the unit root of the fiber; for ``family="fermat"`` the value
    F^(sigma)_{i/N, j/M}(1) with sigma(t) = t^p."""
    if family == "fermat":
        params = HGParams((Fraction(i, N), Fraction(j, M)), p)
        return logtype_eval(params, 1, K)
    if p <= 3:
        raise DomainError("need p > 3 for the elliptic families")
    a = parse_rational(a)
    _, alpha = family_unit_root(family, a, p, K)
    c = a ** (1 - p)
    params = HGParams(FAMILIES[family][0], p, c)
    value = logtype_eval(params, a, K)
    one = PadicScalar(p, K, 1)
    return (one - PadicScalar(p, K, p) / alpha) * value


def fermat_hypothesis(i: int, N: int, j: int, M: int, p: int) -> bool:
    """i/N + j/M < 1 and [F_{a^(k), b^(k)}(1)]_{<p} a unit along the orbit."""
    a, b = Fraction(i, N), Fraction(j, M)
    if a + b >= 1:
        return False
    orbit, _ = dwork_orbit((a, b), p)
    return all(gauss_mod_p(x, y, p).truncated_sum for x, y in orbit)


@dataclass(frozen=True)
class NonvanishingRecord:
    i: int
    j: int
    n: int
    value: int

    @property
    def nonzero(self) -> bool:
        return self.value != 0

    def to_record(self) -> dict:
        return {"i": self.i, "j": self.j, "n": self.n, "value_mod_p^n": str(self.value), "nonzero": self.nonzero}


def truncated_g_at_one(i: int, N: int, j: int, M: int, p: int, n: int) -> int:
    """G_{i/N, j/M}(1)_{<p^n} mod p^n with sigma(t) = t^p."""
    params = HGParams((Fraction(i, N), Fraction(j, M)), p)
    G = g_coeffs(params, p**n - 1, n)
    return sum(G.coeffs) % p**n


def nonvanishing(N: int, M: int, p: int, nmax: int = 3) -> list[NonvanishingRecord]:
    """G(1)_{<p^n} mod p^n for each admissible (i, j) and n = 1..nmax."""
    out = []
    for i in range(1, N):
        for j in range(1, M):
            if not fermat_hypothesis(i, N, j, M, p):
                continue
            for n in range(1, nmax + 1):
                out.append(NonvanishingRecord(i, j, n, truncated_g_at_one(i, N, j, M, p, n)))
    return out
