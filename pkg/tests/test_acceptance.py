"""Acceptance criteria, one PASS/FAIL line each.

Run ``python tests/test_acceptance.py`` for the bare report, or let pytest
collect it; the lines are printed either way.
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from padichg.core import PadicScalar, embed_rational, log_p_twisted, lift_to_ring, primitive_root_of_unity, valuation
from padichg.curves import (
    HGCurveSpec,
    LegendreCurve,
    count_legendre,
    nonvanishing,
    verify_dwork_unit_root,
    verify_hg_unit_roots,
    zeta_numerator,
)
from padichg.curves.families import conjecture_lhs
from padichg.errors import NotOrdinary, OutsideDomain
from padichg.hypergeo import (
    HGParams,
    dwork_congruence,
    g_coeffs,
    g_coeffs_exact,
    gauss_mod_p,
    h_poly,
    hg_coeffs_exact,
    logtype_congruence,
)
from padichg.hypergeo.coeffs import b0_value
from padichg.special import (
    euler_gamma,
    kubota_leopoldt,
    kubota_leopoldt_limit,
    polygamma,
    polylog,
    psi_tilde,
    psi_tilde_rational,
    volkenborn_psi,
)

H = Fraction(1, 2)
GRID = [(H, H), (Fraction(1, 3), Fraction(2, 3)), (Fraction(1, 6), Fraction(5, 6)), (Fraction(1, 4), Fraction(3, 4)), (H, H, H)]


class Criterion:
    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.failures = []
        self.notes = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def note(self, text):
        self.notes.append(text)


def report(crit, elapsed):
    ok = not crit.failures and elapsed <= crit.budget
    verdict = "PASS" if ok else "FAIL"
    line = f"{verdict} [{crit.number:>2}] {crit.title} ({elapsed:.1f}s / {crit.budget:.0f}s)"
    if crit.failures:
        line += f" failures={len(crit.failures)} first={crit.failures[0]}"
    if elapsed > crit.budget:
        line += " over budget"
    for n in crit.notes:
        line += f"\n      {n}"
    print(line, flush=True)
    return ok


def grid_for(p):
    return [a for a in GRID if all(x.denominator % p for x in a)]


# ---- the criteria


def c01(crit):
    for p in (3, 5, 7):
        m = p**6
        expected = [0] + [0 if n % p == 0 else pow(n, -1, m) for n in range(1, 201)]
        for a in ((1, 1), (1, 1, 1)):
            G = g_coeffs(HGParams(a, p), 200, 6)
            crit.check(list(G.coeffs) == expected, (p, a))


def c02(crit):
    rng = random.Random(2024)
    cases = 0
    for p in (3, 5, 7):
        for a in grid_for(p):
            for _ in range(3):
                c = 1 + p * rng.randrange(1, p**8)
                for n in (1, 2, 3):
                    rep = logtype_congruence(HGParams(a, p, c=c), n)
                    cases += 1
                    crit.check(rep.passed, (p, a, c, n, rep.first_failure))
    weak = HGParams((Fraction(1, 3), Fraction(2, 3)), 2, c=3)
    for n in (2, 3, 4):
        rep = logtype_congruence(weak, n)
        cases += 1
        crit.check(rep.passed and rep.modulus_exponent == n - 1, ("weak", n))
    crit.note(f"{cases} cases; parameters with p in the denominator are skipped for that p")


def c03(crit):
    for p in (3, 5, 7):
        for a in grid_for(p):
            for n in (1, 2, 3):
                rep = dwork_congruence(HGParams(a, p), n)
                crit.check(rep.passed, (p, a, n, rep.first_failure))


def c04(crit):
    checked = skipped = 0
    for p in (5, 7, 11, 13):
        for a in range(2, p):
            _, a_p = count_legendre(LegendreCurve(p, a))
            if a_p % p == 0:
                skipped += 1
                continue
            rep = verify_dwork_unit_root(p, a, 5)
            checked += 1
            crit.check(rep.match, (p, a))
    crit.note(f"{checked} ordinary fibers compared, {skipped} supersingular fibers excluded")


def c05(crit):
    for N, M, p, t0 in ((2, 3, 7, 3), (2, 3, 7, 5), (2, 4, 5, 2), (3, 3, 7, 2)):
        spec = HGCurveSpec(N, M, p, t0)
        Z = zeta_numerator(spec)
        u = Z.unit_root_count()
        if u != spec.genus:
            rep = verify_hg_unit_roots(spec, 4, require_ordinary=False)
            crit.note(
                f"({N},{M},{p},{t0}) is not ordinary ({u} of {spec.genus} unit roots); "
                f"precondition fails, slope-0 part {'matches' if rep.match else 'differs'}"
            )
            continue
        rep = verify_hg_unit_roots(spec, 4)
        crit.check(rep.match, (N, M, p, t0))


def c06(crit):
    for p in (5, 7, 11):
        for a0 in range(p):
            for b0 in range(p):
                a = Fraction(-a0) if a0 else Fraction(p)
                b = Fraction(-b0) if b0 else Fraction(p)
                # shift by p to avoid non-positive integers; the truncation mod p only sees a mod p
                g = gauss_mod_p(a + p, b + p, p)
                crit.check(g.agree and (g.a0, g.b0) == (a0, b0), (p, a0, b0))


def c07(crit):
    K, g = 6, 1
    k = K - g
    rng = random.Random(7)
    for p in (3, 5, 7):
        gamma = euler_gamma(p, K)
        # polylog reflection and distribution
        for r in range(4):
            for a in (2, p - 1, p + 2):
                x = PadicScalar(p, K, a)
                if a % p in (0, 1):
                    continue
                crit.check(polylog(r, x, K).agrees(polylog(r, x.inverse(), K) * (-1) ** (r + 1), k), ("refl", p, r, a))
        for N in (2, 3):
            if N % p == 0:
                continue
            zeta = primitive_root_of_unity(N, p, K)
            ring = zeta.ring
            x = lift_to_ring(PadicScalar(p, K, 3 if p != 3 else 2), ring, K)
            if not (x**N - 1).is_unit():
                continue
            for r in range(3):
                total, z = ring.zero(K), ring.one(K)
                for _ in range(N):
                    if (z * x - 1).is_unit():
                        total = total + polylog(r, z * x, K)
                    z = z * zeta
                rhs = polylog(r, x**N, K) * lift_to_ring(Fraction(N) ** (1 - r), ring, K)
                crit.check(total.agrees(rhs, k), ("dist", p, N, r))
        # digamma at 0 and 1, reflection, recurrence
        crit.check(polygamma(0, 0, K, p=p).agrees(-gamma), ("digamma at 0/1", p))
        crit.check(polygamma(0, 1, K, p=p).agrees(-gamma), ("digamma at 0/1", p))
        zs = [Fraction(rng.randrange(-20, 20), rng.choice([1, 2, 3, 4, 6, 8, 11])) for _ in range(6)]
        zs = [z for z in zs if z.denominator % p]
        for r in range(4):
            for z in zs:
                crit.check(psi_tilde(r, z, K, p=p).agrees(psi_tilde(r, 1 - z, K, p=p) * (-1) ** r, k), ("reflection", p, r, z))
                diff = polygamma(r, z + 1, K, p=p) - polygamma(r, z, K, p=p)
                zz = embed_rational(z, p, K)
                want = zz.inverse() ** (r + 1) if zz.is_unit() else PadicScalar(p, K, 0)
                crit.check(diff.agrees(want, k), ("recurrence", p, r, z))
        # root-of-unity route for psi_tilde(n/N)
        for r in range(3):
            for N in range(2, 13):
                if N % p == 0:
                    continue
                for n in range(N):
                    a = psi_tilde_rational(r, n, N, p, K)
                    crit.check(a.agrees(psi_tilde(r, Fraction(n, N), K, p=p), k), ("rational route", p, r, n, N))
        # multiplication formulas
        for m in (2, 3, 4):
            if m % p == 0:
                continue
            lm = log_p_twisted(PadicScalar(p, K + 1, m))
            for z in (Fraction(0), Fraction(1, 2), Fraction(2, 7)):
                if z.denominator % p == 0:
                    continue
                for r in (0, 1, 2):
                    total = PadicScalar(p, K, 0)
                    for i in range(m):
                        total = total + polygamma(r, z + Fraction(i, m), K, p=p)
                    if r == 0:
                        ok = (polygamma(0, m * z, K, p=p) - lm).agrees(total / m, k)
                    else:
                        ok = polygamma(r, m * z, K, p=p).agrees(total / m ** (r + 1), k)
                    crit.check(ok, ("multiplication", p, m, r, z))
        # Volkenborn integrals
        for r in (0, 2, 3):
            for z in (0, rng.randrange(p**8), rng.randrange(p**8)):
                zz = PadicScalar(p, K + 3, z)
                crit.check(volkenborn_psi(r, zz, K).agrees(polygamma(r, zz, K), k), ("volkenborn", p, r, z))
        # N-th roots of an m-th root of unity against the limit sum, m = 3 (2 when p = 3)
        m_ord, N = (3, 2) if p != 3 else (2, 4)
        s, W = 4, 6
        zeta = primitive_root_of_unity(m_ord * N, p, W)
        ring = zeta.ring
        eps = zeta**N
        for r in (0, 1):
            for n in range(N):
                lhs = ring.zero(W)
                for t in range(N):
                    nu = zeta ** (1 + m_ord * t)
                    lhs = lhs + nu ** ((-n) % (m_ord * N)) * polylog(r + 1, nu, W)
                lhs = lhs * lift_to_ring(Fraction(N) ** r, ring, W)
                acc, e_k = ring.zero(W), ring.one(W)
                for kk in range(p**s):
                    base = Fraction(kk) + Fraction(n, N)
                    if base.numerator % p:
                        acc = acc + e_k * lift_to_ring(base ** -(r + 1), ring, W)
                    e_k = e_k * eps
                crit.check(lhs.agrees(acc / (1 - eps ** (p**s)), s - g), ("root sum vs limit sum", p, r, n))
        # L-values from two auxiliary N
        for r in (-2, 0, 2, 3):
            vals = []
            for N in (2, 3, 4, 5):
                if N % p:
                    try:
                        vals.append(kubota_leopoldt(r, p, K, N=N))
                    except Exception:
                        pass
            for v in vals[1:]:
                crit.check(v.agrees(vals[0], min(k, v.prec, vals[0].prec)), ("two auxiliary N", p, r))


def c08(crit):
    for p in (3, 5, 7):
        for r in (-3, -2, -1, 0, 2, 3, 4):
            vals = {}
            for N in (2, 3, 4, 5, 7):
                if N % p:
                    try:
                        vals[N] = kubota_leopoldt(r, p, 4, N=N)
                    except Exception:
                        pass
            crit.check(len(vals) >= 2, ("fewer than two N", p, r))
            ref = next(iter(vals.values()))
            for v in vals.values():
                crit.check(v.agrees(ref, min(4, v.prec, ref.prec)), ("two N", p, r))
            if r <= 0:
                crit.check(kubota_leopoldt(r, p, 4, route="B").agrees(ref, min(4, ref.prec)), ("A vs B", p, r))
            else:
                lim = kubota_leopoldt_limit(r, p, 5, 4)
                crit.check(lim.agrees(ref, min(4, lim.prec, ref.prec)), ("A vs limit", p, r))


def _ratio(x, y, p, k):
    r = Fraction(x) / Fraction(y)
    if valuation(r, p) < 0:
        return None
    return embed_rational(r, p, k)


def c09(crit):
    rng = random.Random(9)
    for p in (3, 5, 7):
        for a in grid_for(p):
            params = HGParams(a, p)
            twisted = HGParams(a, p, c=1 + p * rng.randrange(1, 100))
            D = 2 * p**2 + p
            A = hg_coeffs_exact(a, D)
            Ap = hg_coeffs_exact(params.primed, D)
            for prm in (params, twisted):
                B = g_coeffs_exact(prm, D)
                crit.check(all(valuation(x, p) >= 0 for x in A), ("A", p, a))
                crit.check(all(valuation(x, p) >= 0 for x in B[1:]), ("B", p, a))
                for n in (1, 2):
                    for m in range(1, D - p**n + 1):
                        x, y = _ratio(B[m], A[m], p, n), _ratio(B[m + p**n], A[m + p**n], p, n)
                        crit.check(x is not None and y is not None and x.agrees(y, n), ("B/A locally constant", p, a, m, n))
            for n in (1, 2):
                b0n = b0_value(params, n + 1)
                b02 = b0_value(params, 2 * n + 1)
                B = g_coeffs_exact(params, D)
                for m in (1, 2):
                    idx = m * p**n
                    if idx > D:
                        continue
                    r3 = _ratio(B[idx], A[idx], p, n)
                    crit.check(r3 is not None and r3.agrees(b0n, n), ("B/A at m p^n", p, a, m, n))
                    r2 = _ratio(Ap[idx // p], A[idx], p, 2 * n)
                    crit.check(r2 is not None and r2.agrees(1 - b02 * idx, 2 * n), ("A'/A mod p^2n", p, a, m, n))
                for m in range(0, D - p**n + 1):
                    x = _ratio(A[m], Ap[m // p], p, n)
                    y = _ratio(A[m + p**n], Ap[(m + p**n) // p], p, n)
                    crit.check(x is not None and y is not None and x.agrees(y, n), ("A/A' locally constant", p, a, m, n))


def c10(crit):
    for N, M, p in ((3, 3, 7), (2, 4, 5), (4, 4, 5)):
        recs = nonvanishing(N, M, p, nmax=3)
        by_pair = {}
        for rec in recs:
            by_pair.setdefault((rec.i, rec.j), []).append(rec.value)
        for (i, j), values in sorted(by_pair.items()):
            flag = "" if any(values) else "  VANISHES for all n <= 3 (flagged)"
            crit.note(f"(N,M,p)=({N},{M},{p}) (i,j)=({i},{j}) G(1) mod p^n, n=1..3: {values}{flag}")
        if not by_pair:
            crit.note(f"(N,M,p)=({N},{M},{p}): no (i,j) satisfies the hypothesis")


def c11(crit):
    p, a = 7, 4
    h = h_poly((H, H), p)
    h_at = sum(c * a**i for i, c in enumerate(h)) % p
    _, a_p = count_legendre(LegendreCurve(p, a))
    crit.note(f"h(t) mod 7 = {h}, h(4) = {h_at} mod 7; a_7(E_4) = {a_p}")
    try:
        lo = conjecture_lhs("legendre", a, p, 6)
        hi = conjecture_lhs("legendre", a, p, 7)
    except (OutsideDomain, NotOrdinary) as exc:
        crit.check(False, f"{type(exc).__name__}: {exc}")
        return
    crit.check(lo.agrees(hi, 6), "precision 7^6 vs 7^7")
    crit.note(f"value mod 7^6 = {lo.residue}")


CRITERIA = [
    (1, "G = ln_1 for all-ones parameters, degree 200, mod p^6", 10, c01),
    (2, "log-type congruence grid and weak 2-adic case", 120, c02),
    (3, "Dwork congruence grid", 60, c03),
    (4, "Dwork unit root vs point counts, mod p^5", 60, c04),
    (5, "hypergeometric-curve unit-root multisets, mod p^4", 600, c05),
    (6, "truncated 2F1(1) vs binomial formula mod p", 10, c06),
    (7, "polygamma identity suite, K=6, guard 1", 300, c07),
    (8, "Kubota-Leopoldt cross-route, mod p^4", 60, c08),
    (9, "integrality and coefficient-ratio congruences", 120, c09),
    (10, "G(1) non-vanishing experiment", 300, c10),
    (11, "(1 - 7/alpha) F^(sigma_4)_{1/2,1/2}(4) at 7^6 and 7^7", 60, c11),
]


def run_one(number):
    _, title, budget, fn = CRITERIA[number - 1]
    crit = Criterion(number, title, budget)
    t = time.perf_counter()
    fn(crit)
    return report(crit, time.perf_counter() - t)


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    with capsys.disabled():
        print()
        ok = run_one(number)
    assert ok


if __name__ == "__main__":
    results = [run_one(c[0]) for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
