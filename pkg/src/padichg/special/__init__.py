"""Polylogarithms, Euler's constant, digamma/polygamma and L-values."""

from .bernoulli import bernoulli, power_sum
from .digamma import euler_gamma, polygamma, psi_tilde, psi_tilde_rational, volkenborn_psi
from .lfunction import choose_auxiliary_n, kubota_leopoldt, kubota_leopoldt_limit
from .polylog import polylog

__all__ = [
    "bernoulli",
    "choose_auxiliary_n",
    "euler_gamma",
    "kubota_leopoldt",
    "kubota_leopoldt_limit",
    "polygamma",
    "polylog",
    "power_sum",
    "psi_tilde",
    "psi_tilde_rational",
    "volkenborn_psi",
]
