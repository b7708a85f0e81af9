"""Coefficientwise checks of the logarithmic-type and Dwork congruences."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeffs import b0_value, floor_log, g_residues, hg_residues
from .params import HGParams
from .series import convolve_mod


@dataclass(frozen=True)
class CongruenceReport:
    check: str
    params: dict
    n: int
    modulus_exponent: int
    degree: int
    failing: tuple[int, ...] = field(default_factory=tuple)
    strict_failing: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return not self.failing

    @property
    def first_failure(self) -> int | None:
        return self.failing[0] if self.failing else None

    def to_record(self) -> dict:
        rec = {
            "check": self.check,
            "params": self.params,
            "n": self.n,
            "modulus_exponent": self.modulus_exponent,
            "degree": self.degree,
            "pass": self.passed,
            "first_failing_index": self.first_failure,
            "failing_count": len(self.failing),
        }
        if self.strict_failing is not None:
            rec["strict_modulus_failing_count"] = len(self.strict_failing)
        return rec


def _failures(lhs, rhs, m):
    return tuple(i for i, (x, y) in enumerate(zip(lhs, rhs)) if (x - y) % m)


def logtype_congruence(params: HGParams, n: int, D: int | None = None) -> CongruenceReport:
    """F [G]_{<p^n} = G [F]_{<p^n} modulo p^n (p^(n-1) in the weak p = 2 case),
    coefficientwise up to degree D."""
    p = params.p
    if D is None:
        D = p**n + 25
    if D < p**n:
        raise ValueError("degree must be at least p^n")
    exponent = n - 1 if params.weak else n
    W = n + floor_log(D, p) + 1
    A = hg_residues(params.a, p, D, W)
    B = list(g_residues(params, D, W, A))
    B[0] = b0_value(params, n + 1).residue
    m = p**n
    A = [x % m for x in A]
    B = [x % m for x in B]
    cut = p**n
    lhs = convolve_mod(A, B[:cut], m, D + 1)
    rhs = convolve_mod(B, A[:cut], m, D + 1)
    failing = _failures(lhs, rhs, p**exponent)
    strict = _failures(lhs, rhs, m) if params.weak else None
    return CongruenceReport("logtype_congruence", params.describe(), n, exponent, D, failing, strict)


def dwork_congruence(params: HGParams, n: int, D: int | None = None) -> CongruenceReport:
    """F_a(t) [F_a'(t^p)]_{<p^n} = F_a'(t^p) [F_a(t)]_{<p^n} modulo p^n."""
    p = params.p
    if D is None:
        D = p**n + 25
    m = p**n
    A = hg_residues(params.a, p, D, n)
    Ap = hg_residues(params.primed, p, D // p, n)
    Frob = [0] * (D + 1)
    for j, x in enumerate(Ap):
        Frob[j * p] = x
    cut = p**n
    lhs = convolve_mod(A, Frob[:cut], m, D + 1)
    rhs = convolve_mod(Frob, A[:cut], m, D + 1)
    failing = _failures(lhs, rhs, m)
    return CongruenceReport("dwork_congruence", params.describe(), n, n, D, failing)


def congruence_report(params: HGParams, n: int, D: int | None = None) -> tuple[CongruenceReport, CongruenceReport]:
    """Both congruences for the same parameters; Dwork's ignores the twist."""
    return logtype_congruence(params, n, D), dwork_congruence(params, n, D)
