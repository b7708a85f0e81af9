"""p-adic scalars, unramified extensions and the basic transcendental maps."""

from .functions import (
    frobenius,
    hensel_quadratic_unit_root,
    iwasawa_log,
    log_p_twisted,
    multiplicative_order,
    primitive_root_of_unity,
    roots_of_unity,
    teichmuller,
)
from .scalar import PadicScalar, embed_rational, parse_rational, split_p, valuation
from .unramified import UnramifiedRing, UnramifiedScalar, lift_to_ring, unramified_ring

__all__ = [
    "PadicScalar",
    "UnramifiedRing",
    "UnramifiedScalar",
    "embed_rational",
    "frobenius",
    "hensel_quadratic_unit_root",
    "iwasawa_log",
    "lift_to_ring",
    "log_p_twisted",
    "multiplicative_order",
    "parse_rational",
    "primitive_root_of_unity",
    "roots_of_unity",
    "split_p",
    "teichmuller",
    "unramified_ring",
    "valuation",
]
