"""Finite fields F_{p^e} through discrete log / exponential tables.

Elements are encoded as integers: the coefficient vector of the
polynomial representative read in base p, constant term first.
"""

from __future__ import annotations

from functools import lru_cache

from ..core import fpoly


def _encode(coeffs, p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


class FiniteField:
    """F_q with q = p^e, modulus the least irreducible polynomial of degree e."""

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = list(fpoly.least_irreducible(p, e)) if e > 1 else [0, 1]
        self.gen = self._primitive_element()
        self.exp, self.log = self._tables()

    def _primitive_element(self) -> list[int]:
        p, q = self.p, self.q
        if self.e == 1:
            for g in range(1, p):
                if all(pow(g, (q - 1) // r, p) != 1 for r in fpoly.prime_factors(q - 1)):
                    return [g]
            return [1]
        for code in range(p, q):
            cand = [(code // p**k) % p for k in range(self.e)]
            if all(
                fpoly.trim(fpoly.powmod(cand, (q - 1) // r, self.modulus, p)) != [1]
                for r in fpoly.prime_factors(q - 1)
            ):
                return cand
        raise RuntimeError("no primitive element found")

    def _tables(self):
        p, q = self.p, self.q
        exp = [0] * (q - 1)
        log = [-1] * q
        if self.e == 1:
            g = self.gen[0]
            x = 1
            for k in range(q - 1):
                exp[k] = x
                log[x] = k
                x = x * g % p
            return exp, log
        x = [1]
        for k in range(q - 1):
            code = _encode(x + [0] * (self.e - len(x)), p)
            exp[k] = code
            log[code] = k
            x = fpoly.mod(fpoly.mul(x, self.gen, p), self.modulus, p)
        return exp, log

    def add_int(self, code: int, c: int) -> int:
        """code + c for c in F_p (touches only the constant coefficient)."""
        c0 = code % self.p
        return code - c0 + (c0 + c) % self.p

    def neg(self, code: int) -> int:
        out, k = 0, 1
        while code:
            out += (-(code % self.p) % self.p) * k
            code //= self.p
            k *= self.p
        return out


@lru_cache(maxsize=32)
def finite_field(p: int, e: int) -> FiniteField:
    return FiniteField(p, e)
