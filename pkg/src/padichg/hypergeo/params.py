"""Hypergeometric parameters, the Dwork prime and Frobenius twists."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..core import PadicScalar, parse_rational
from ..errors import DenominatorDivisibleByP, DomainError


def dwork_prime(a, p: int) -> Fraction:
    """(a + l)/p with l in {0, ..., p-1} and a + l = 0 mod p.

    EXAMPLES::

        >>> dwork_prime(Fraction(1, 3), 5)
        Fraction(2, 3)
    """
    a = parse_rational(a)
    if a.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{a} is not {p}-integral")
    l = (-a.numerator * pow(a.denominator, -1, p)) % p
    return (a + l) / p


def dwork_orbit(a, p: int) -> tuple[list, int]:
    """Iterate the Dwork prime until a value repeats.

    Works on a single rational or a tuple of rationals (componentwise).
    Returns the distinct iterates in order and the length of the cycle
    they end in.
    """
    if isinstance(a, (tuple, list)):
        step = lambda v: tuple(dwork_prime(x, p) for x in v)
        cur = tuple(parse_rational(x) for x in a)
    else:
        step = lambda v: dwork_prime(v, p)
        cur = parse_rational(a)
    seen: dict = {}
    orbit = []
    while cur not in seen:
        seen[cur] = len(orbit)
        orbit.append(cur)
        cur = step(cur)
    return orbit, len(orbit) - seen[cur]


_POWER = re.compile(r"^\s*(?P<base>[-+]?\d+(?:/\d+)?)\s*\^\s*\{?\s*1\s*-\s*p\s*\}?\s*$")


def parse_twist(text, p: int) -> Fraction:
    """Parse a twist constant: a rational, or ``a^{1-p}`` meaning a^(1-p)."""
    if isinstance(text, (Fraction, int)):
        return Fraction(text)
    m = _POWER.match(str(text))
    if m:
        base = parse_rational(m.group("base"))
        if base == 0:
            raise ValueError("twist base must be nonzero")
        return base ** (1 - p)
    return parse_rational(text)


def parse_params(text) -> tuple[Fraction, ...]:
    if isinstance(text, (tuple, list)):
        return tuple(parse_rational(x) for x in text)
    return tuple(parse_rational(x) for x in str(text).split(",") if x.strip())


@dataclass(frozen=True)
class HGParams:
    """Parameters a_1..a_s of F_a(t) = sum_n prod_i (a_i)_n / n! t^n, a prime p
    and the twist c of the Frobenius t -> c t^p."""

    a: tuple[Fraction, ...]
    p: int
    c: Fraction | PadicScalar = Fraction(1)

    def __post_init__(self):
        a = tuple(parse_rational(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise DomainError("at least one parameter is required")
        for x in a:
            if x.denominator % self.p == 0:
                raise DenominatorDivisibleByP(f"{x} is not {self.p}-integral")
            if x.denominator == 1 and x <= 0:
                raise DomainError(f"parameter {x} is a non-positive integer")
        c = self.c
        if not isinstance(c, PadicScalar):
            c = parse_twist(c, self.p)
            object.__setattr__(self, "c", c)
            if c.denominator % self.p == 0 or c.numerator % self.p == 0:
                raise DomainError("twist must be a p-adic unit")
        if self.c_residue(2) % self.p != 1 % self.p:
            raise DomainError(f"twist must be congruent to 1 modulo {self.p}")

    @property
    def s(self) -> int:
        return len(self.a)

    @property
    def primed(self) -> tuple[Fraction, ...]:
        return tuple(dwork_prime(x, self.p) for x in self.a)

    @property
    def weak(self) -> bool:
        """p = 2 and c is not 1 mod 4: the congruences lose one digit."""
        return self.p == 2 and self.c_residue(2) % 4 != 1

    def c_residue(self, W: int) -> int:
        if isinstance(self.c, PadicScalar):
            if self.c.prec < W:
                raise DomainError(f"twist known to {self.c.prec} digits, {W} needed")
            return self.c.residue % self.p**W
        return PadicScalar.from_rational(self.c, self.p, W).residue

    def c_scalar(self, W: int) -> PadicScalar:
        if isinstance(self.c, PadicScalar):
            return self.c.reduce(W)
        return PadicScalar.from_rational(self.c, self.p, W)

    def describe(self) -> dict:
        c = self.c.to_record() if isinstance(self.c, PadicScalar) else str(self.c)
        return {"a": [str(x) for x in self.a], "p": self.p, "c": c, "weak": self.weak}
