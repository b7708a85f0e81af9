from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padichg.core import PadicScalar, embed_rational
from padichg.curves import (
    FAMILIES,
    HGCurveSpec,
    LegendreCurve,
    conjecture_lhs,
    count_cubic,
    count_hg_curve,
    count_legendre,
    fermat_hypothesis,
    finite_field,
    nonvanishing,
    unit_root_factor,
    verify_dwork_unit_root,
    verify_hg_unit_roots,
    zeta_from_counts,
    zeta_numerator,
)
from padichg.curves.counting import hasse_bound_ok, legendre_symbol, weil_bound_ok
from padichg.curves.families import family_curve, truncated_g_at_one
from padichg.curves.zeta import coefficients_from_sums, power_sums
from padichg.errors import Inconsistent, NotImplementedGeneralS, NotOrdinary, OutsideDomain, PDividesN
from padichg.hypergeo import HGParams, g_coeffs_exact
from padichg.hypergeo.coeffs import b0_value


def brute_legendre(p, a):
    n = 1
    for x in range(p):
        rhs = x * (1 - x) * (1 - a * x) % p
        n += sum(1 for y in range(p) if y * y % p == rhs)
    return n


def brute_hg_affine(N, M, p, t0):
    return sum(1 for x in range(p) for y in range(p) if (1 - pow(x, N, p)) * (1 - pow(y, M, p)) % p == t0 % p)


# ---- finite fields


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (5, 2), (7, 2)])
def test_field_tables_are_a_cyclic_group(p, e):
    F = finite_field(p, e)
    assert F.q == p**e
    assert sorted(F.exp[: F.q - 1]) == list(range(1, F.q))
    for code in range(1, F.q):
        assert F.exp[F.log[code]] == code


def test_field_addition_has_characteristic_p():
    F = finite_field(5, 2)
    for code in range(F.q):
        x = code
        for _ in range(5):
            x = F.add_int(x, 1)
        assert x == code
        assert F.add_int(F.neg(code), 0) == F.neg(code)


# ---- elliptic curves


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_legendre_count_brute_force(p):
    for a in range(2, p):
        count, a_p = count_legendre(LegendreCurve(p, a))
        assert count == brute_legendre(p, a)
        assert a_p == p + 1 - count
        assert hasse_bound_ok(a_p, p)


def test_legendre_five_two():
    assert count_legendre(LegendreCurve(5, 2)) == (8, -2)


def test_legendre_rejects_degenerate():
    with pytest.raises(OutsideDomain):
        LegendreCurve(7, 1)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_legendre_twist_relation(p):
    # a -> a/(a-1) is a quadratic twist by 1 - a
    for a in range(2, p):
        b = a * pow(a - 1, -1, p) % p
        if b in (0, 1):
            continue
        _, ap_a = count_legendre(LegendreCurve(p, a))
        _, ap_b = count_legendre(LegendreCurve(p, b))
        assert ap_b == legendre_symbol(1 - a, p) * ap_a


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_family_models_obey_hasse(family):
    for p in (5, 7, 11, 13):
        for a in range(2, p):
            try:
                k, cub = family_curve(family, a, p)
            except Exception:
                continue
            _, a_p = count_cubic(p, cub, k)
            assert hasse_bound_ok(a_p, p)


# ---- hypergeometric curves


@pytest.mark.parametrize("N,M,p,t0", [(2, 2, 5, 2), (2, 3, 7, 3), (3, 3, 7, 2), (2, 4, 5, 2), (3, 4, 13, 5)])
def test_hg_count_brute_force(N, M, p, t0):
    spec = HGCurveSpec(N, M, p, t0)
    at_infinity = gcd(N, p - 1) + gcd(M, p - 1)
    assert count_hg_curve(spec) == brute_hg_affine(N, M, p, t0) + at_infinity


@pytest.mark.parametrize("N,M,p,t0", [(2, 3, 7, 3), (3, 3, 7, 2), (2, 4, 5, 2)])
def test_hg_counts_satisfy_weil(N, M, p, t0):
    spec = HGCurveSpec(N, M, p, t0)
    for e in range(1, spec.genus + 2):
        assert weil_bound_ok(count_hg_curve(spec, e), p**e, spec.genus)


def test_hg_spec_domain():
    with pytest.raises(PDividesN):
        HGCurveSpec(5, 2, 5, 2)
    with pytest.raises(OutsideDomain):
        HGCurveSpec(2, 3, 7, 1)


# ---- zeta numerators


@settings(max_examples=40)
@given(roots=st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_newton_identities_roundtrip(roots):
    coeffs = [1]
    for r in roots:
        coeffs = [a - r * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    sums = power_sums(coeffs, len(roots))
    assert coefficients_from_sums(sums) == coeffs


def test_non_integral_sums_are_inconsistent():
    with pytest.raises(Inconsistent):
        coefficients_from_sums([1, 2])


@pytest.mark.parametrize("N,M,p,t0", [(2, 2, 5, 2), (2, 3, 7, 3), (2, 3, 7, 5), (3, 3, 7, 2), (2, 4, 5, 2)])
def test_zeta_numerator_shape(N, M, p, t0):
    spec = HGCurveSpec(N, M, p, t0)
    Z = zeta_numerator(spec)
    g = spec.genus
    assert len(Z.coeffs) == 2 * g + 1
    assert Z.coeffs[0] == 1 and Z.coeffs[-1] == p**g
    assert Z.functional_equation_holds()
    for e in range(1, g + 2):
        assert Z.predicted_count(e) == count_hg_curve(spec, e)


def test_zeta_of_elliptic_curve():
    Z = zeta_from_counts(7, 1, [count_legendre(LegendreCurve(7, 3))[0]])
    _, a_p = count_legendre(LegendreCurve(7, 3))
    assert list(Z.coeffs) == [1, -a_p, 7]


def test_wrong_counts_are_caught():
    spec = HGCurveSpec(2, 3, 7, 3)
    counts = [count_hg_curve(spec, e) for e in range(1, 3)]
    Z = zeta_from_counts(7, 2, counts)
    assert Z.predicted_count(3) == count_hg_curve(spec, 3)
    with pytest.raises(Inconsistent):
        zeta_from_counts(7, 2, [counts[0] + 7, counts[1]])
    bad = zeta_from_counts(7, 2, [counts[0] + 2, counts[1]])
    assert bad.predicted_count(3) != count_hg_curve(spec, 3)


# ---- unit roots


@pytest.mark.parametrize("p", [5, 7])
def test_dwork_unit_root_all_ordinary_fibers(p):
    for a in range(2, p):
        _, a_p = count_legendre(LegendreCurve(p, a))
        if a_p % p == 0:
            with pytest.raises((NotOrdinary, OutsideDomain)):
                verify_dwork_unit_root(p, a, 4)
            continue
        rep = verify_dwork_unit_root(p, a, 4)
        assert rep.match, rep.to_record()


def test_supersingular_legendre_fibers_at_seven():
    assert [a for a in range(2, 7) if count_legendre(LegendreCurve(7, a))[1] % 7 == 0] == [2, 4, 6]


@pytest.mark.parametrize("N,M,p,t0", [(2, 2, 5, 2), (2, 2, 7, 3), (2, 3, 7, 3)])
def test_hg_unit_roots_match_series(N, M, p, t0):
    rep = verify_hg_unit_roots(HGCurveSpec(N, M, p, t0), 4)
    assert rep.match, rep.to_record()


def test_non_ordinary_fiber_is_reported():
    spec = HGCurveSpec(2, 4, 5, 2)
    Z = zeta_numerator(spec)
    assert list(Z.coeffs) == [1, 2, -5, -20, -25, 50, 125]
    assert Z.unit_root_count() == 1
    with pytest.raises(NotOrdinary):
        unit_root_factor(Z, 4)
    R = unit_root_factor(Z, 4, require_ordinary=False)
    assert len(R.factor) == 2


def test_hg_series_needs_split_roots_of_unity():
    with pytest.raises(NotImplementedGeneralS):
        verify_hg_unit_roots(HGCurveSpec(2, 3, 5, 2), 3)


# ---- special values on elliptic families


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_family_value_is_stable_in_precision(family):
    p, a = 5, 2
    lo = conjecture_lhs(family, a, p, 4)
    hi = conjecture_lhs(family, a, p, 5)
    assert lo.agrees(hi, 4)


def test_legendre_family_at_supersingular_fiber():
    with pytest.raises((NotOrdinary, OutsideDomain)):
        conjecture_lhs("legendre", 4, 7, 4)


def test_fermat_value_is_stable():
    lo = conjecture_lhs("fermat", None, 7, 3, i=1, N=3, j=1, M=3)
    hi = conjecture_lhs("fermat", None, 7, 4, i=1, N=3, j=1, M=3)
    assert lo.agrees(hi, 3)


# ---- non-vanishing of G(1)


def exact_g_at_one(i, N, j, M, p, n):
    params = HGParams((Fraction(i, N), Fraction(j, M)), p)
    B = g_coeffs_exact(params, p**n - 1)
    total = b0_value(params, n).residue
    for x in B[1:]:
        total += embed_rational(x, p, n).residue
    return total % p**n


@pytest.mark.parametrize("N,M,p", [(3, 3, 7), (2, 4, 5), (4, 4, 5)])
def test_truncated_g_matches_exact_sum(N, M, p):
    for rec in nonvanishing(N, M, p, nmax=3):
        assert rec.value == exact_g_at_one(rec.i, N, rec.j, M, p, rec.n)
        assert rec.value == truncated_g_at_one(rec.i, N, rec.j, M, p, rec.n)


def test_fermat_hypothesis_examples():
    assert fermat_hypothesis(1, 3, 1, 3, 7)
    assert not fermat_hypothesis(2, 3, 2, 3, 7)
