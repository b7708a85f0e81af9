"""Point counts, zeta numerators and unit-root comparisons."""

from .counting import HGCurveSpec, LegendreCurve, count_cubic, count_hg_curve, count_legendre
from .families import FAMILIES, conjecture_lhs, family_unit_root, fermat_hypothesis, nonvanishing
from .ffield import FiniteField, finite_field
from .unitroot import hg_series_unit_values, verify_dwork_unit_root, verify_hg_unit_roots
from .zeta import ZetaNumerator, unit_root_factor, zeta_from_counts, zeta_numerator

__all__ = [
    "FAMILIES",
    "FiniteField",
    "HGCurveSpec",
    "LegendreCurve",
    "ZetaNumerator",
    "conjecture_lhs",
    "count_cubic",
    "count_hg_curve",
    "count_legendre",
    "family_unit_root",
    "fermat_hypothesis",
    "finite_field",
    "hg_series_unit_values",
    "nonvanishing",
    "unit_root_factor",
    "verify_dwork_unit_root",
    "verify_hg_unit_roots",
    "zeta_from_counts",
    "zeta_numerator",
]
