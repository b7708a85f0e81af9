"""Truncated power series over Z_p / p^prec."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import PadicScalar, split_p
from ..errors import DivisionNotExact, NonUnitConstantTerm

_INT64_SAFE = 2**62


def convolve_mod(a, b, m: int, n: int) -> list[int]:
    """First n coefficients of the product of two integer sequences, modulo m."""
    a = list(a[:n])
    b = list(b[:n])
    if not a or not b:
        return [0] * n
    if (m - 1) ** 2 * min(len(a), len(b)) < _INT64_SAFE:
        out = np.convolve(np.array(a, dtype=np.int64) % m, np.array(b, dtype=np.int64) % m)
        res = [int(x) % m for x in out[:n]]
    else:
        res = [0] * min(n, len(a) + len(b) - 1)
        nz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in nz:
                    if i + j >= n:
                        break
                    res[i + j] += x * y
        res = [x % m for x in res]
    return res + [0] * (n - len(res))


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{i <= D} coeffs[i] t^i with coefficients known modulo p^prec."""

    p: int
    prec: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        m = self.p**self.prec
        object.__setattr__(self, "coeffs", tuple(int(c) % m for c in self.coeffs))

    @classmethod
    def from_rationals(cls, values, p: int, prec: int) -> "TruncatedSeries":
        return cls(p, prec, tuple(PadicScalar.from_rational(v, p, prec).residue for v in values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def modulus(self) -> int:
        return self.p**self.prec

    def coefficient(self, i: int) -> PadicScalar:
        return PadicScalar(self.p, self.prec, self.coeffs[i])

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def reduce(self, prec: int) -> "TruncatedSeries":
        return self if prec >= self.prec else TruncatedSeries(self.p, prec, self.coeffs)

    def _align(self, other: "TruncatedSeries"):
        if other.p != self.p:
            raise ValueError("mixing different primes")
        prec = min(self.prec, other.prec)
        n = min(len(self), len(other))
        return prec, n

    def __add__(self, other):
        prec, n = self._align(other)
        return TruncatedSeries(self.p, prec, tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __sub__(self, other):
        prec, n = self._align(other)
        return TruncatedSeries(self.p, prec, tuple(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __neg__(self):
        return TruncatedSeries(self.p, self.prec, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, PadicScalar)):
            prec = self.prec
            c = other
            if isinstance(other, PadicScalar):
                prec = min(prec, other.prec)
                c = other.residue
            return TruncatedSeries(self.p, prec, tuple(a * c for a in self.coeffs))
        prec, n = self._align(other)
        return TruncatedSeries(self.p, prec, tuple(convolve_mod(self.coeffs, other.coeffs, self.p**prec, n)))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        if self.coeffs[0] % self.p == 0:
            raise NonUnitConstantTerm("constant term is not a unit")
        m = self.modulus
        inv0 = pow(self.coeffs[0], -1, m)
        out = [inv0]
        a = self.coeffs
        for n in range(1, len(a)):
            acc = 0
            for k in range(1, n + 1):
                acc += a[k] * out[n - k]
            out.append(-acc * inv0 % m)
        return TruncatedSeries(self.p, self.prec, tuple(out))

    def truncate(self, n: int) -> "TruncatedSeries":
        """[f]_{<n}: zero every coefficient of index >= n, keeping the degree."""
        return TruncatedSeries(self.p, self.prec, tuple(c if i < n else 0 for i, c in enumerate(self.coeffs)))

    def substitute_frobenius(self, c=1) -> "TruncatedSeries":
        """f(c t^p), truncated to the same degree."""
        prec = self.prec
        if isinstance(c, PadicScalar):
            prec = min(prec, c.prec)
            cr = c.residue
        else:
            cr = PadicScalar.from_rational(c, self.p, prec).residue
        m = self.p**prec
        out = [0] * len(self.coeffs)
        power = 1
        for k, a in enumerate(self.coeffs):
            if k * self.p > self.degree:
                break
            out[k * self.p] = a * power % m
            power = power * cr % m
        return TruncatedSeries(self.p, prec, tuple(out))

    def integrate0(self) -> "TruncatedSeries":
        """sum a_n t^n -> sum (a_n / n) t^n; needs a_0 = 0 and exact divisions.

        The result is known to ``prec - k`` digits where p^k is the largest
        power of p dividing an index.
        """
        p = self.p
        if self.coeffs[0] % self.modulus:
            raise DivisionNotExact("constant term must vanish")
        kmax = 0
        while p ** (kmax + 1) <= self.degree:
            kmax += 1
        prec = self.prec - kmax
        m = p**prec
        out = [0]
        for n in range(1, len(self.coeffs)):
            k, u = split_p(n, p)
            a = self.coeffs[n]
            if a % p**k:
                raise DivisionNotExact(f"coefficient {n} is not divisible by p^{k}")
            out.append((a // p**k) * pow(u, -1, m) % m)
        return TruncatedSeries(p, prec, tuple(out))

    def evaluate(self, x) -> PadicScalar:
        prec = self.prec
        if isinstance(x, PadicScalar):
            prec = min(prec, x.prec)
            xr = x.residue
        else:
            xr = PadicScalar.from_rational(x, self.p, prec).residue
        m = self.p**prec
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * xr + c) % m
        return PadicScalar(self.p, prec, acc)

    def agrees(self, other: "TruncatedSeries", k: int | None = None) -> list[int]:
        """Indices where the two series differ modulo p^k (empty when they agree)."""
        prec, n = self._align(other)
        k = prec if k is None else k
        m = self.p**k
        return [i for i in range(n) if (self.coeffs[i] - other.coeffs[i]) % m]

    def to_record(self) -> dict:
        return {"p": self.p, "prec": self.prec, "D": self.degree, "coeffs": [str(c) for c in self.coeffs]}
