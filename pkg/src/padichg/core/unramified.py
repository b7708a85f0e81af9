"""Unramified extensions Z_q = Z_p[theta]/(g) and their elements."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from ..errors import Inconsistent, NotAUnit
from . import fpoly
from .scalar import PadicScalar, parse_rational


@dataclass(frozen=True)
class UnramifiedRing:
    """Z_q for q = p^f, presented as Z_p[theta] modulo a monic lift of an
    irreducible polynomial over F_p."""

    p: int
    f: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.f

    def reduce_poly(self, c: list[int], m: int) -> tuple[int, ...]:
        f, g = self.f, self.modulus
        c = list(c) + [0] * max(0, f - len(c))
        for d in range(len(c) - 1, f - 1, -1):
            lead = c[d]
            if lead:
                base = d - f
                for i in range(f):
                    c[base + i] -= lead * g[i]
        return tuple(x % m for x in c[:f])

    def mul_raw(self, a, b, m: int) -> tuple[int, ...]:
        f = self.f
        if f == 1:
            return (a[0] * b[0] % m,)
        out = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self.reduce_poly(out, m)

    def pow_raw(self, a, e: int, m: int) -> tuple[int, ...]:
        if self.f == 1:
            return (pow(a[0], e, m),)
        result = (1,) + (0,) * (self.f - 1)
        base = tuple(x % m for x in a)
        while e:
            if e & 1:
                result = self.mul_raw(result, base, m)
            e >>= 1
            if e:
                base = self.mul_raw(base, base, m)
        return result

    def inv_raw(self, a, k: int) -> tuple[int, ...]:
        """Inverse of a unit modulo p^k."""
        p = self.p
        m = p**k
        if self.f == 1:
            return (pow(a[0], -1, m),)
        g, s, _ = fpoly.xgcd(list(a), list(self.modulus), p)
        if g != [1]:
            raise NotAUnit("element is not a unit of the unramified ring")
        y = tuple(s + [0] * (self.f - len(s)))
        prec = 1
        while prec < k:
            prec = min(2 * prec, k)
            mm = p**prec
            ay = self.mul_raw(a, y, mm)
            two_minus = tuple(((2 if i == 0 else 0) - x) % mm for i, x in enumerate(ay))
            y = self.mul_raw(y, two_minus, mm)
        return tuple(x % m for x in y)

    def is_unit_raw(self, a) -> bool:
        return any(x % self.p for x in a)

    def frobenius_powers(self, k: int) -> tuple[tuple[int, ...], ...]:
        """Images of theta^0, ..., theta^(f-1) under Frobenius, modulo p^k."""
        return _frobenius_powers(self, k)

    def frobenius_raw(self, a, k: int) -> tuple[int, ...]:
        if self.f == 1:
            return tuple(a)
        m = self.p**k
        imgs = self.frobenius_powers(k)
        out = [0] * self.f
        for c, img in zip(a, imgs):
            if c:
                for i, y in enumerate(img):
                    out[i] += c * y
        return tuple(x % m for x in out)

    def element(self, coeffs, prec: int) -> "UnramifiedScalar":
        return UnramifiedScalar(self, prec, tuple(coeffs))

    def scalar(self, x, prec: int) -> "UnramifiedScalar":
        """Image of an integer, rational or PadicScalar."""
        if isinstance(x, PadicScalar):
            if not x.is_integral():
                raise ValueError("only integral scalars embed in the unramified ring")
            return UnramifiedScalar(self, min(prec, x.prec), (x.residue,) + (0,) * (self.f - 1))
        q = parse_rational(x)
        return UnramifiedScalar(
            self, prec, (PadicScalar.from_rational(q, self.p, prec).residue,) + (0,) * (self.f - 1)
        )

    def generator(self, prec: int) -> "UnramifiedScalar":
        if self.f == 1:
            return UnramifiedScalar(self, prec, (0,))
        return UnramifiedScalar(self, prec, (0, 1) + (0,) * (self.f - 2))

    def one(self, prec: int) -> "UnramifiedScalar":
        return self.scalar(1, prec)

    def zero(self, prec: int) -> "UnramifiedScalar":
        return self.scalar(0, prec)


@lru_cache(maxsize=None)
def unramified_ring(p: int, f: int) -> UnramifiedRing:
    """The deterministic presentation of Z_q, q = p^f."""
    return UnramifiedRing(p, f, fpoly.least_irreducible(p, f))


def _eval_modulus(ring: UnramifiedRing, x, m: int, derivative: bool = False):
    g = ring.modulus
    coeffs = [i * g[i] for i in range(1, len(g))] if derivative else list(g)
    acc = (0,) * ring.f
    for c in reversed(coeffs):
        acc = ring.mul_raw(acc, x, m)
        acc = ((acc[0] + c) % m,) + acc[1:]
    return acc


@lru_cache(maxsize=256)
def _frobenius_powers(ring: UnramifiedRing, k: int):
    p, f = ring.p, ring.f
    if f == 1:
        return ((1,),)
    # theta^p reduced mod p, then Newton lifted to a root of the modulus
    root = fpoly.powmod([0, 1], p, list(ring.modulus), p)
    phi = tuple(root + [0] * (f - len(root)))
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        m = p**prec
        num = _eval_modulus(ring, phi, m)
        den = _eval_modulus(ring, phi, m, derivative=True)
        step = ring.mul_raw(num, ring.inv_raw(den, prec), m)
        phi = tuple((a - b) % m for a, b in zip(phi, step))
    m = p**k
    if any(_eval_modulus(ring, phi, m)):
        raise Inconsistent("Frobenius lift is not a root of the modulus")
    out = [(1,) + (0,) * (f - 1)]
    for _ in range(f - 1):
        out.append(ring.mul_raw(out[-1], phi, m))
    return tuple(out)


@dataclass(frozen=True)
class UnramifiedScalar:
    """An element of Z_q known modulo p^prec, in the power basis of theta."""

    ring: UnramifiedRing
    prec: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.prec < 1:
            raise ValueError("precision must be at least 1")
        if len(self.coeffs) != self.ring.f:
            raise ValueError("coefficient vector has the wrong length")
        m = self.ring.p**self.prec
        object.__setattr__(self, "coeffs", tuple(int(c) % m for c in self.coeffs))

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def f(self) -> int:
        return self.ring.f

    @property
    def modulus(self) -> int:
        return self.ring.p**self.prec

    def _coerce(self, other):
        if isinstance(other, UnramifiedScalar):
            if other.ring != self.ring:
                raise ValueError("mixing elements of different rings")
            return other
        if isinstance(other, (PadicScalar, int, Rational)):
            return self.ring.scalar(other, self.prec)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return UnramifiedScalar(self.ring, min(self.prec, o.prec), tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return UnramifiedScalar(self.ring, self.prec, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prec = min(self.prec, o.prec)
        return UnramifiedScalar(self.ring, prec, self.ring.mul_raw(self.coeffs, o.coeffs, self.p**prec))

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return self.ring.is_unit_raw(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        """Minimum valuation of the coordinates, capped at prec."""
        best = self.prec
        for c in self.coeffs:
            if c:
                v = 0
                while c % self.p == 0:
                    c //= self.p
                    v += 1
                best = min(best, v)
        return best

    def inverse(self) -> "UnramifiedScalar":
        if not self.is_unit():
            raise NotAUnit("element is not a unit")
        return UnramifiedScalar(self.ring, self.prec, self.ring.inv_raw(self.coeffs, self.prec))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return UnramifiedScalar(self.ring, self.prec, self.ring.pow_raw(self.coeffs, e, self.modulus))

    def frobenius(self) -> "UnramifiedScalar":
        return UnramifiedScalar(self.ring, self.prec, self.ring.frobenius_raw(self.coeffs, self.prec))

    def reduce(self, prec: int) -> "UnramifiedScalar":
        if prec >= self.prec:
            return self
        return UnramifiedScalar(self.ring, prec, self.coeffs)

    def divide_by_p_power(self, e: int) -> "UnramifiedScalar":
        """Exact division by p^e; the precision drops by e."""
        from ..errors import DivisionNotExact

        pe = self.p**e
        if any(c % pe for c in self.coeffs):
            raise DivisionNotExact(f"element not divisible by p^{e}")
        return UnramifiedScalar(self.ring, self.prec - e, tuple(c // pe for c in self.coeffs))

    def agrees(self, other, k: int | None = None) -> bool:
        o = self._coerce(other)
        if k is None:
            k = min(self.prec, o.prec)
        m = self.p**k
        return all((a - b) % m == 0 for a, b in zip(self.coeffs, o.coeffs))

    def in_base(self) -> bool:
        return not any(self.coeffs[1:])

    def to_padic(self) -> PadicScalar:
        """Project an element of Z_p, checking the other coordinates vanish."""
        if not self.in_base():
            raise Inconsistent("element does not lie in Z_p")
        return PadicScalar(self.p, self.prec, self.coeffs[0])

    def to_record(self) -> dict:
        return {"p": self.p, "f": self.f, "prec": self.prec, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"UnramifiedScalar(p={self.p}, f={self.f}, prec={self.prec}, coeffs={self.coeffs})"


def lift_to_ring(x, ring: UnramifiedRing, prec: int | None = None) -> UnramifiedScalar:
    """View an integer, rational, PadicScalar or UnramifiedScalar in ``ring``."""
    if isinstance(x, UnramifiedScalar):
        if x.ring == ring:
            return x if prec is None else x.reduce(prec)
        if x.f == 1:
            return ring.scalar(x.to_padic(), x.prec if prec is None else min(prec, x.prec))
        raise ValueError("cannot move an extension element into a different ring")
    if isinstance(x, PadicScalar):
        return ring.scalar(x, x.prec if prec is None else min(prec, x.prec))
    if prec is None:
        raise ValueError("precision needed to embed an exact number")
    return ring.scalar(Fraction(x), prec)
