"""Hypergeometric series F_a, the logarithmic-type series G_a and their
special values."""

from .coeffs import g_coeffs, g_coeffs_exact, g_residues, hg_coeffs, hg_coeffs_exact, hg_residues
from .congruence import CongruenceReport, congruence_report, dwork_congruence, logtype_congruence
from .evaluate import GaussCheck, dwork_eval, gauss_mod_p, h_poly, in_domain, logtype_eval
from .params import HGParams, dwork_orbit, dwork_prime, parse_params, parse_twist
from .series import TruncatedSeries

__all__ = [
    "CongruenceReport",
    "GaussCheck",
    "HGParams",
    "TruncatedSeries",
    "congruence_report",
    "dwork_congruence",
    "dwork_eval",
    "dwork_orbit",
    "dwork_prime",
    "g_coeffs",
    "g_coeffs_exact",
    "g_residues",
    "gauss_mod_p",
    "h_poly",
    "hg_coeffs",
    "hg_coeffs_exact",
    "hg_residues",
    "in_domain",
    "logtype_congruence",
    "logtype_eval",
    "parse_params",
    "parse_twist",
]
