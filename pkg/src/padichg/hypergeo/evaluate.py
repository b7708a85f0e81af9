"""Special values: Dwork's function F^Dw and the logarithmic-type F^(sigma)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..core import PadicScalar, embed_rational, parse_rational, split_p
from ..core import fpoly
from ..errors import OutsideDomain
from .coeffs import _hg_stream, b0_value, hg_coeffs_exact, hg_residues
from .params import HGParams, dwork_orbit


def truncation_mod_p(a, p: int) -> list[int]:
    """[F_a(t)]_{<p} reduced modulo p, lowest degree first."""
    coeffs = hg_coeffs_exact(tuple(a), p - 1)
    return [embed_rational(x, p, 1).residue for x in coeffs]


def h_poly(a, p: int) -> list[int]:
    """Product of [F_{a^(i)}(t)]_{<p} over the Dwork orbit of a, modulo p.

    EXAMPLES::

        >>> h_poly((1, 1), 5)
        [1, 1, 1, 1, 1]
    """
    orbit, _ = dwork_orbit(tuple(parse_rational(x) for x in a), p)
    out = [1]
    for member in orbit:
        out = fpoly.mul(out, truncation_mod_p(member, p), p)
    return out


def in_domain(a, p: int, alpha) -> bool:
    """True when every orbit truncation is a unit at alpha."""
    x = _residue(alpha, p, 1)
    orbit, _ = dwork_orbit(tuple(parse_rational(v) for v in a), p)
    return all(fpoly.evaluate(truncation_mod_p(m, p), x, p) != 0 for m in orbit)


def _residue(alpha, p: int, W: int) -> int:
    if isinstance(alpha, PadicScalar):
        if alpha.prec < W:
            raise OutsideDomain(f"evaluation point known to {alpha.prec} digits, {W} needed")
        return alpha.residue % p**W
    return embed_rational(alpha, p, W).residue


def _require_domain(a, p, alpha):
    if not in_domain(a, p, alpha):
        raise OutsideDomain("h(alpha) = 0 mod p: a truncation [F]_{<p} vanishes at alpha")


def series_level(K: int, p: int, weak: bool = False) -> int:
    """Truncation exponent n: the ratio is taken over indices < p^n."""
    return K + (1 if (p == 2 or weak) else 0)


def dwork_eval(a, alpha, K: int, p: int, *, n: int | None = None) -> PadicScalar:
    """F^Dw_a(alpha) = [F_a]_{<p^n}(alpha) / [F_a'(t^p)]_{<p^n}(alpha)."""
    params = HGParams(tuple(a), p)
    _require_domain(params.a, p, alpha)
    if n is None:
        n = series_level(K, p)
    m = p**K
    x = _residue(alpha, p, K)
    A = hg_residues(params.a, p, p**n - 1, K)
    Ap = hg_residues(params.primed, p, p ** (n - 1) - 1, K)
    num = 0
    for c in reversed(A):
        num = (num * x + c) % m
    xp = pow(x, p, m)
    den = 0
    for c in reversed(Ap):
        den = (den * xp + c) % m
    if den % p == 0:
        raise OutsideDomain("denominator truncation is not a unit")
    return PadicScalar(p, K, num * pow(den, -1, m))


def logtype_eval(params: HGParams, alpha, K: int, *, n: int | None = None) -> PadicScalar:
    """F^(sigma)_a(alpha) = [G_a]_{<p^n}(alpha) / [F_a]_{<p^n}(alpha)."""
    p = params.p
    _require_domain(params.a, p, alpha)
    if n is None:
        n = series_level(K, p, params.weak)
    D = p**n - 1
    kmax = n - 1
    W = K + kmax + 1
    m = p**W
    mo = p ** (K + 1)
    x = _residue(alpha, p, W)
    Ap = hg_residues(params.primed, p, D // p, W)
    c = params.c_residue(W)
    F_acc = 0
    G_acc = 0
    xpow = 1
    cpow = 1
    for idx, An in enumerate(_hg_stream(params.a, p, D, W)):
        if idx == 0:
            F_acc = 1
        else:
            F_acc += An * xpow
            if idx % p:
                B = An * pow(idx, -1, mo)
            else:
                cpow = cpow * c % m
                k, u = split_p(idx, p)
                diff = (An - cpow * Ap[idx // p]) % m
                pk = p**k
                assert diff % pk == 0
                B = (diff // pk) * pow(u, -1, mo)
            G_acc += B * xpow
        xpow = xpow * x % m
        if idx % 4096 == 0:
            F_acc %= m
            G_acc %= mo
    b0 = b0_value(params, K + 1).residue
    F_val = F_acc % mo
    G_val = (G_acc + b0) % mo
    if F_val % p == 0:
        raise OutsideDomain("F truncation is not a unit at alpha")
    mk = p**K
    return PadicScalar(p, K, G_val * pow(F_val, -1, mk))


@dataclass(frozen=True)
class GaussCheck:
    a: Fraction
    b: Fraction
    p: int
    a0: int
    b0: int
    truncated_sum: int
    predicted: int

    @property
    def agree(self) -> bool:
        return self.truncated_sum == self.predicted


def gauss_mod_p(a, b, p: int) -> GaussCheck:
    """[F_{a,b}(1)]_{<p} mod p next to (a0 + b0)! / (a0! b0!) mod p,
    where a = -a0 and b = -b0 mod p with a0, b0 in {0..p-1}."""
    a, b = parse_rational(a), parse_rational(b)
    coeffs = truncation_mod_p((a, b), p)
    total = sum(coeffs) % p
    a0 = (-a.numerator * pow(a.denominator, -1, p)) % p
    b0 = (-b.numerator * pow(b.denominator, -1, p)) % p
    predicted = comb(a0 + b0, a0) % p
    return GaussCheck(a, b, p, a0, b0, total, predicted)
