"""Elements of Q_p known to a fixed absolute precision."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ..errors import DenominatorDivisibleByP, DivisionNotExact, NotAUnit, PrecisionError


def valuation(n: int, p: int) -> int:
    """Return v_p(n) for a nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def split_p(n: int, p: int) -> tuple[int, int]:
    """Write a nonzero integer as p^v * u with p not dividing u; return (v, u)."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def parse_rational(text) -> Fraction:
    """Parse ``"n"``, ``"n/d"`` or a number into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, (int, Rational)):
        return Fraction(text)
    s = str(text).strip()
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


@dataclass(frozen=True)
class PadicScalar:
    """The number ``residue / p**shift`` known modulo ``p**prec``.

    ``prec`` is the absolute precision. ``shift`` is zero for elements of
    Z_p; a positive shift lets the same type carry the few Q_p values
    (L-values near their pole, Euler's constant at p = 2) that are not
    integral. The residue is reduced modulo ``p**(prec + shift)`` and
    the shift is kept minimal.

    EXAMPLES::

        >>> x = PadicScalar(5, 3, 7)
        >>> (x * x).residue
        49
        >>> PadicScalar.from_rational(Fraction(1, 5), 5, 2)
        PadicScalar(p=5, prec=2, residue=1, shift=1)
    """

    p: int
    prec: int
    residue: int
    shift: int = 0

    def __post_init__(self):
        p, prec, shift = self.p, self.prec, self.shift
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        if shift < 0:
            raise ValueError("shift must be non-negative")
        if prec + shift < 1:
            raise PrecisionError("no p-adic digits left")
        r = self.residue % p ** (prec + shift)
        while shift > 0 and r % p == 0:
            r //= p
            shift -= 1
        if shift > 0 and prec + shift < 1:
            raise PrecisionError("no p-adic digits left")
        object.__setattr__(self, "residue", r)
        object.__setattr__(self, "shift", shift)

    # construction

    @classmethod
    def from_int(cls, n: int, p: int, prec: int) -> "PadicScalar":
        return cls(p, prec, n)

    @classmethod
    def from_rational(cls, q, p: int, prec: int) -> "PadicScalar":
        """Embed a rational; denominators divisible by p give a shifted value."""
        q = parse_rational(q)
        num, den = q.numerator, q.denominator
        shift = 0
        while den % p == 0:
            den //= p
            shift += 1
        m = p ** (prec + shift)
        return cls(p, prec, num * pow(den, -1, m), shift)

    @classmethod
    def zero(cls, p: int, prec: int) -> "PadicScalar":
        return cls(p, prec, 0)

    @classmethod
    def one(cls, p: int, prec: int) -> "PadicScalar":
        return cls(p, prec, 1)

    # basic queries

    @property
    def digits_carried(self) -> int:
        return self.prec + self.shift

    @property
    def modulus(self) -> int:
        return self.p ** (self.prec + self.shift)

    def valuation(self) -> int:
        """v_p of the value, or ``prec`` when the value is zero to known precision."""
        if self.residue == 0:
            return self.prec
        return valuation(self.residue, self.p) - self.shift

    def is_zero(self) -> bool:
        return self.residue == 0

    def is_unit(self) -> bool:
        return self.shift == 0 and self.residue % self.p != 0

    def is_integral(self) -> bool:
        return self.shift == 0

    def lift(self) -> Fraction:
        """Canonical rational representative ``residue / p**shift``."""
        return Fraction(self.residue, self.p ** self.shift)

    def centered(self) -> int:
        """Integral residue in the symmetric range around zero."""
        if self.shift:
            raise ValueError("not integral")
        m = self.modulus
        r = self.residue
        return r - m if 2 * r > m else r

    def reduce(self, prec: int) -> "PadicScalar":
        """Forget digits beyond ``p**prec``."""
        if prec >= self.prec:
            return self
        return PadicScalar(self.p, prec, self.residue, self.shift)

    def base_p_digits(self) -> list[int]:
        """Digits of the residue, least significant first."""
        out = []
        r = self.residue
        for _ in range(self.digits_carried):
            r, d = divmod(r, self.p)
            out.append(d)
        return out

    # arithmetic

    def _coerce(self, other) -> "PadicScalar":
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise ValueError("mixing different primes")
            return other
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            extra = 0 if q == 0 else max(0, valuation(q.numerator, self.p))
            return PadicScalar.from_rational(q, self.p, self.prec + self.shift + extra + 1)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.p
        s = max(self.shift, o.shift)
        r = self.residue * p ** (s - self.shift) + o.residue * p ** (s - o.shift)
        return PadicScalar(p, min(self.prec, o.prec), r, s)

    __radd__ = __add__

    def __neg__(self):
        return PadicScalar(self.p, self.prec, -self.residue, self.shift)

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
        prec = min(self.prec + o.valuation(), o.prec + self.valuation())
        return PadicScalar(self.p, prec, self.residue * o.residue, self.shift + o.shift)

    __rmul__ = __mul__

    def inverse(self) -> "PadicScalar":
        if not self.is_unit():
            raise NotAUnit(f"{self.residue} is not a unit in Z_{self.p}")
        return PadicScalar(self.p, self.prec, pow(self.residue, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.is_unit():
            raise NotAUnit("division by a non-unit; use divide_exact or scale")
        prec = min(self.prec, o.prec + self.valuation())
        inv = pow(o.residue, -1, self.p ** (prec + self.shift))
        return PadicScalar(self.p, prec, self.residue * inv, self.shift)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_unit():
            return PadicScalar(self.p, self.prec, pow(self.residue, n, self.modulus))
        if n == 0:
            return PadicScalar(self.p, self.prec, 1)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, e: int) -> "PadicScalar":
        """Multiply by p**e; negative e divides and may leave Z_p."""
        s = self.shift - e
        if s >= 0:
            return PadicScalar(self.p, self.prec + e, self.residue, s)
        return PadicScalar(self.p, self.prec + e, self.residue * self.p ** (-s), 0)

    def divide_exact(self, other) -> "PadicScalar":
        """Divide by a possibly non-unit, insisting the quotient is integral."""
        o = self._coerce(other)
        if o.residue == 0:
            raise ZeroDivisionError("division by zero")
        v = o.valuation()
        unit = o.scale(-v)
        q = (self / unit).scale(-v)
        if q.shift > 0:
            raise DivisionNotExact(f"quotient has valuation {q.valuation()}")
        return q

    def agrees(self, other, k: int | None = None) -> bool:
        """True when the two values agree modulo p**k (default: common precision)."""
        o = self._coerce(other)
        if k is None:
            k = min(self.prec, o.prec)
        if k > min(self.prec, o.prec):
            raise PrecisionError(f"asked for agreement mod p^{k} beyond known precision")
        d = self - o
        return d.residue == 0 or d.valuation() >= k

    def __int__(self):
        if self.shift:
            raise ValueError("not integral")
        return self.residue

    def __repr__(self):
        return f"PadicScalar(p={self.p}, prec={self.prec}, residue={self.residue}, shift={self.shift})"

    def to_record(self) -> dict:
        rec = {"p": self.p, "f": 1, "prec": self.prec, "coeffs": [str(self.residue)]}
        if self.shift:
            rec["shift"] = self.shift
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "PadicScalar":
        if rec.get("f", 1) != 1:
            raise ValueError("record describes an extension element")
        return cls(int(rec["p"]), int(rec["prec"]), int(rec["coeffs"][0]), int(rec.get("shift", 0)))


def embed_rational(q, p: int, prec: int) -> PadicScalar:
    """Image of a p-integral rational in Z_p / p^prec.

    EXAMPLES::

        >>> embed_rational(Fraction(1, 2), 5, 3).residue
        63
    """
    q = parse_rational(q)
    if q.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{q} is not {p}-integral")
    return PadicScalar.from_rational(q, p, prec)
