"""Bernoulli numbers and exact power sums."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from threading import Lock

_lock = Lock()
_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2.

    EXAMPLES::

        >>> bernoulli(2), bernoulli(12)
        (Fraction(1, 6), Fraction(-691, 2730))
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    with _lock:
        while len(_cache) <= n:
            m = len(_cache)
            acc = sum(comb(m + 1, k) * _cache[k] for k in range(m))
            _cache.append(-acc / (m + 1))
        return _cache[n]


@lru_cache(maxsize=None)
def _faulhaber(i: int) -> tuple[int, tuple[int, ...]]:
    """Integer coefficients c_j and a denominator d with
    sum_{m<M} m^i = (sum_j c_j M^(i+1-j)) / d."""
    terms = [comb(i + 1, k) * bernoulli(k) / (i + 1) for k in range(i + 1)]
    d = 1
    for t in terms:
        d = d * t.denominator // _gcd(d, t.denominator)
    return d, tuple(int(t * d) for t in terms)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def power_sum(i: int, M: int) -> int:
    """sum_{m=0}^{M-1} m^i for M >= 0, exactly (0^0 = 1).

    EXAMPLES::

        >>> power_sum(2, 4)
        14
    """
    if M <= 0:
        return 0
    d, cs = _faulhaber(i)
    acc = 0
    for c in cs:
        acc = acc * M + c
    acc *= M
    q, r = divmod(acc, d)
    assert r == 0
    return q
