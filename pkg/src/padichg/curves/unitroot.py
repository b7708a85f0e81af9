"""Unit roots from point counts next to the series formulas."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core import PadicScalar, embed_rational, hensel_quadratic_unit_root, teichmuller
from ..errors import NotImplementedGeneralS, NotOrdinary, OutsideDomain
from ..hypergeo import HGParams, dwork_eval, in_domain, logtype_eval
from ..hypergeo.params import dwork_prime
from .counting import HGCurveSpec, LegendreCurve, count_cubic, count_legendre
from .zeta import legendre_numerator, poly_from_roots, unit_root_factor, zeta_numerator


@dataclass(frozen=True)
class DworkUnitRootReport:
    p: int
    a: int
    prec: int
    a_p: int
    point_count_root: PadicScalar
    series_root: PadicScalar

    @property
    def match(self) -> bool:
        return self.point_count_root.agrees(self.series_root, self.prec)

    def to_record(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "prec": self.prec,
            "a_p": self.a_p,
            "unit_root": self.point_count_root.to_record(),
            "series_value": self.series_root.to_record(),
            "verdict": "match" if self.match else "mismatch",
        }


def verify_dwork_unit_root(p: int, a: int, K: int) -> DworkUnitRootReport:
    """Unit root of y^2 = x(1-x)(1-ax) over F_p against
    (-1)^((p-1)/2) F^Dw_{1/2,1/2}(teichmuller(a))."""
    curve = LegendreCurve(p, a)
    _, a_p = count_legendre(curve)
    alpha = hensel_quadratic_unit_root(a_p, p, K)
    half = (Fraction(1, 2), Fraction(1, 2))
    if not in_domain(half, p, curve.a):
        raise OutsideDomain(f"h({curve.a}) = 0 mod {p}")
    t_hat = teichmuller(PadicScalar(p, K, curve.a))
    value = dwork_eval(half, t_hat, K, p)
    if (p - 1) // 2 % 2:
        value = -value
    return DworkUnitRootReport(p, curve.a, K, a_p, alpha, value)


def _frob_factor(a: Fraction, b: Fraction, t_hat: PadicScalar, p: int) -> PadicScalar:
    """(1-t)^(a+b) / (1-t^p)^(a'+b') at a Teichmuller point when a' = a and
    b' = b: it collapses to omega(1 - t)^(-l) with l = (p-1)(a+b)."""
    l = (p - 1) * (a + b)
    assert l.denominator == 1
    w = teichmuller(PadicScalar(p, t_hat.prec, 1) - t_hat)
    return w.inverse() ** int(l) if l >= 0 else w ** int(-l)


@dataclass(frozen=True)
class HGUnitRootReport:
    spec: HGCurveSpec
    prec: int
    counts: tuple[int, ...]
    zeta_coeffs: tuple[int, ...]
    unit_root_factor: tuple[int, ...]
    unit_roots: tuple[PadicScalar, ...] | None
    series_values: tuple[tuple[int, int, PadicScalar], ...]
    skipped: tuple[tuple[int, int], ...]

    @property
    def unit_series(self) -> list[PadicScalar]:
        return sorted((v for _, _, v in self.series_values), key=lambda s: s.residue)

    @property
    def cardinality_match(self) -> bool:
        return len(self.unit_series) == len(self.unit_root_factor) - 1

    @property
    def match(self) -> bool:
        if not self.cardinality_match:
            return False
        if poly_from_roots(self.unit_series, self.spec.p, self.prec) != self.unit_root_factor:
            return False
        if self.unit_roots is not None:
            return [r.residue for r in self.unit_roots] == [v.residue for v in self.unit_series]
        return True

    def to_record(self) -> dict:
        return {
            "spec": {"N": self.spec.N, "M": self.spec.M, "p": self.spec.p, "t0": self.spec.t0},
            "prec": self.prec,
            "counts": list(self.counts),
            "zeta_coeffs": list(self.zeta_coeffs),
            "unit_root_factor": [str(c) for c in self.unit_root_factor],
            "unit_roots": None if self.unit_roots is None else [r.to_record() for r in self.unit_roots],
            "series_values": [
                {"i": i, "j": j, "value": v.to_record()} for i, j, v in self.series_values
            ],
            "non_unit_components": [list(x) for x in self.skipped],
            "verdict": "match" if self.match else "mismatch",
        }


def hg_series_unit_values(spec: HGCurveSpec, K: int):
    """Eigenvalues from the series side for every component (i, j); those
    that are not units (or fall outside the domain) are listed separately."""
    N, M, p = spec.N, spec.M, spec.p
    if (p - 1) % N or (p - 1) % M:
        raise NotImplementedGeneralS("only N, M dividing p - 1 are supported on the curve side")
    t_hat = teichmuller(PadicScalar(p, K, spec.t0))
    values, skipped = [], []
    for i in range(1, N):
        for j in range(1, M):
            a, b = 1 - Fraction(i, N), 1 - Fraction(j, M)
            assert dwork_prime(a, p) == a and dwork_prime(b, p) == b
            if not in_domain((a, b), p, spec.t0):
                skipped.append((i, j))
                continue
            v = _frob_factor(a, b, t_hat, p) * dwork_eval((a, b), t_hat, K, p)
            if v.is_unit():
                values.append((i, j, v))
            else:
                skipped.append((i, j))
    return values, skipped


def verify_hg_unit_roots(spec: HGCurveSpec, K: int, *, require_ordinary: bool = True) -> HGUnitRootReport:
    """Compare the unit roots of Frobenius on the fiber at t0 with the
    series eigenvalues, as multisets modulo p^K.

    With ``require_ordinary=False`` a fiber with fewer than g unit roots is
    still compared on its slope-0 part.
    """
    values, skipped = hg_series_unit_values(spec, K)
    Z = zeta_numerator(spec)
    U = unit_root_factor(Z, K, require_ordinary=require_ordinary)
    return HGUnitRootReport(spec, K, Z.counts, Z.coeffs, U.factor, U.roots, tuple(values), tuple(skipped))
