"""Exact finite sums over integers prime to p.

Writing k = c + B m with B = N p and expanding (c + B m)^e binomially
turns a sum over k < L into polynomial power sums in m, which are exact
integers. The expansion converges p-adically because B is divisible by
p, so the cost is O(B * W) instead of O(L).
"""

from __future__ import annotations

from functools import lru_cache

from ..core import PadicScalar, iwasawa_log, split_p
from .bernoulli import power_sum


def binom_general(e: int, i: int) -> int:
    """Binomial coefficient C(e, i) for any integer e."""
    num = 1
    den = 1
    for t in range(i):
        num *= e - t
        den *= t + 1
    return num // den


def _block_counts(L: int, B: int) -> dict[int, int]:
    q, r = divmod(max(L, 0), B)
    return {c: q + (1 if c < r else 0) for c in range(B)}


@lru_cache(maxsize=4096)
def progression_power_sums(L: int, e: int, p: int, N: int, W: int) -> tuple[int, ...]:
    """T[u] = sum of k^e over 1 <= k < L, p not dividing k, k = u mod N;
    each modulo p^W.

    EXAMPLES::

        >>> progression_power_sums(10, 2, 3, 2, 5)[1] == (1 + 25 + 49) % 243
        True
    """
    if N % p == 0:
        raise ValueError("N must be prime to p")
    m = p**W
    B = N * p
    counts = _block_counts(L, B)
    i_max = W if e < 0 else min(e, W - 1)
    binoms = [binom_general(e, i) % m for i in range(i_max + 1)]
    bpow = [pow(B, i, m) for i in range(i_max + 1)]
    sums: dict[tuple[int, int], int] = {}
    out = [0] * N
    for c in range(1, B):
        if c % p == 0:
            continue
        M = counts[c]
        if M == 0:
            continue
        inv = pow(c, -1, m)
        ce = pow(c, e, m) if e >= 0 else pow(inv, -e, m)
        acc = 0
        for i in range(i_max + 1):
            key = (i, M)
            s = sums.get(key)
            if s is None:
                s = sums[key] = power_sum(i, M) % m
            acc += binoms[i] * bpow[i] % m * s * ce
            ce = ce * inv % m
        out[c % N] = (out[c % N] + acc) % m
    return tuple(out)


def unit_power_sum(L: int, e: int, p: int, W: int) -> int:
    """sum_{1 <= k < L, p not dividing k} k^e modulo p^W."""
    return progression_power_sums(L, e, p, 1, W)[0]


@lru_cache(maxsize=None)
def _small_logs(p: int, W: int) -> tuple[int, ...]:
    out = [0]
    for c in range(1, p):
        out.append(iwasawa_log(PadicScalar(p, W, c)).residue)
    return tuple(out)


def _floor_log(n: int, p: int) -> int:
    e = 0
    while p ** (e + 1) <= n:
        e += 1
    return e


@lru_cache(maxsize=1024)
def unit_log_sum(L: int, p: int, W: int) -> int:
    """sum_{1 <= k < L, p not dividing k} log(k) modulo p^W (Iwasawa log)."""
    # log(c + p m) = log(c) + sum_i (-1)^(i+1) (p m / c)^i / i
    i_max = 1
    while i_max - _floor_log(i_max, p) < W:
        i_max += 1
    g = _floor_log(i_max, p)
    big = p ** (W + g)
    m = p**W
    logs = _small_logs(p, W)
    counts = _block_counts(L, p)
    sums: dict[tuple[int, int], int] = {}
    total = 0
    for c in range(1, p):
        M = counts[c]
        if M == 0:
            continue
        total += M * logs[c]
        inv = pow(c, -1, big)
        ratio = p * inv % big
        power = 1
        for i in range(1, i_max):
            power = power * ratio % big
            key = (i, M)
            s = sums.get(key)
            if s is None:
                s = sums[key] = power_sum(i, M)
            v, u = split_p(i, p)
            term = power * (s % big) % big
            assert term % p**v == 0
            term = (term // p**v) * pow(u, -1, big)
            total += term if i % 2 else -term
    return total % m
