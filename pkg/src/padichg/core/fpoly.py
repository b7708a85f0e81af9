"""Dense polynomials over F_p, coefficients stored lowest degree first."""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a, b, p):
    return add(a, [-x for x in b], p)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_poly(a, b, p):
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    a = a[:]
    while len(a) >= len(b):
        c = a[-1] * inv % p
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = (a[d + i] - c * y) % p
        trim(a)
    return trim(q), a


def mod(a, b, p):
    return divmod_poly(a, b, p)[1]


def gcd(a, b, p):
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = trim([x % p for x in a]), trim([x % p for x in b])
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    scale = lambda v: [x * inv % p for x in v]
    return scale(r0), scale(s0), scale(t0)


def powmod(a, e, m, p):
    result = [1]
    base = mod(a, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = mod(mul(base, base, p), m, p)
    return result


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(g, p) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    f = len(g) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    x = [0, 1]
    if powmod(x, p**f, g, p) != mod(x, g, p):
        return False
    for q in prime_factors(f):
        h = sub(powmod(x, p ** (f // q), g, p), x, p)
        if len(gcd(h, g, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    """The lexicographically least monic irreducible polynomial of degree f.

    Candidates are ordered by their coefficient list read from degree
    f-1 down to degree 0.
    """
    if f == 1:
        return (0, 1)
    for high_to_low in product(range(p), repeat=f):
        g = list(reversed(high_to_low)) + [1]
        if g[0] == 0:
            continue
        if is_irreducible(g, p):
            return tuple(g)
    raise ArithmeticError("no irreducible polynomial found")


def roots(a, p) -> list[int]:
    """Roots in F_p by exhaustive search, with multiplicity ignored."""
    return [x for x in range(p) if evaluate(a, x, p) == 0]


def evaluate(a, x, p) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def derivative(a, p):
    return trim([i * a[i] % p for i in range(1, len(a))])
