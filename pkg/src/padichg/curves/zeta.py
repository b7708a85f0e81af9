"""Zeta numerators from point counts, and their p-adic unit roots."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import PadicScalar, fpoly
from ..errors import Inconsistent, NotOrdinary
from .counting import HGCurveSpec, count_hg_curve, weil_bound_ok


@dataclass(frozen=True)
class ZetaNumerator:
    """P(T) = sum coeffs[k] T^k, with the counts it was built from."""

    p: int
    genus: int
    coeffs: tuple[int, ...]
    counts: tuple[int, ...] = field(default_factory=tuple)

    def predicted_count(self, e: int) -> int:
        """#X(F_{p^e}) = p^e + 1 - s_e with s_e the reciprocal-root power sum."""
        return self.p**e + 1 - power_sums(self.coeffs, e)[e - 1]

    def reversed_poly(self) -> list[int]:
        """Q(X) = X^{2g} P(1/X), monic, constant term first; its roots are
        the Frobenius eigenvalues."""
        return list(reversed(self.coeffs))

    def functional_equation_holds(self) -> bool:
        g, p, c = self.genus, self.p, self.coeffs
        return all(c[2 * g - k] == p ** (g - k) * c[k] for k in range(g + 1))

    def unit_root_count(self) -> int:
        """Length of the slope-0 segment of the Newton polygon of P."""
        n = 0
        for k, ck in enumerate(self.coeffs):
            if ck % self.p:
                n = k
        return n


def power_sums(coeffs, n: int) -> list[int]:
    """s_1..s_n for P(T) = prod (1 - alpha_i T) given by its coefficients."""
    c = list(coeffs) + [0] * (n + 1)
    s = []
    for k in range(1, n + 1):
        acc = -k * c[k]
        for i in range(1, k):
            acc -= c[i] * s[k - i - 1]
        s.append(acc)
    return s


def coefficients_from_sums(sums) -> list[int]:
    """Newton's identities: k c_k = -sum_{i=1..k} s_i c_{k-i}."""
    c = [1]
    for k in range(1, len(sums) + 1):
        acc = 0
        for i in range(1, k + 1):
            acc -= sums[i - 1] * c[k - i]
        if acc % k:
            raise Inconsistent(f"Newton identity gives a non-integral coefficient at T^{k}")
        c.append(acc // k)
    return c


def zeta_from_counts(p: int, genus: int, counts) -> ZetaNumerator:
    """Rebuild P(T) from #X(F_{p^e}) for e = 1..g via the functional equation."""
    g = genus
    sums = [p**e + 1 - counts[e - 1] for e in range(1, g + 1)]
    c = coefficients_from_sums(sums)
    full = c + [0] * g
    for k in range(g):
        full[2 * g - k] = p ** (g - k) * c[k]
    return ZetaNumerator(p, g, tuple(full), tuple(counts))


def zeta_numerator(spec: HGCurveSpec, *, check: bool = True) -> ZetaNumerator:
    """P(T) for the hypergeometric curve, with an arbitration count at
    e = g + 1 that must match the reconstruction."""
    g = spec.genus
    counts = [count_hg_curve(spec, e) for e in range(1, g + 1)]
    for e, n in enumerate(counts, 1):
        if not weil_bound_ok(n, spec.p**e, g):
            raise Inconsistent(f"count over F_{spec.p}^{e} violates the Weil bound")
    Z = zeta_from_counts(spec.p, g, counts)
    if check:
        extra = count_hg_curve(spec, g + 1)
        if Z.predicted_count(g + 1) != extra:
            raise Inconsistent(f"count over F_{spec.p}^{g + 1} contradicts the reconstructed numerator")
        Z = ZetaNumerator(Z.p, g, Z.coeffs, tuple(counts) + (extra,))
    return Z


def legendre_numerator(p: int, a_p: int) -> ZetaNumerator:
    return ZetaNumerator(p, 1, (1, -a_p, p))


# Hensel lifting of a coprime factorisation Q = R S mod p


def _poly_mul(a, b, m):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [x % m for x in out]


def _poly_sub(a, b, m):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [(x - y) % m for x, y in zip(a, b)]


def hensel_factor(Q, R0, S0, p: int, K: int) -> tuple[list[int], list[int]]:
    """Lift Q = R0 S0 mod p (R0 monic, gcd(R0, S0) = 1) to Q = R S mod p^K."""
    one, a, b = fpoly.xgcd(R0, S0, p)
    one = fpoly.trim(one)
    if len(one) != 1:
        raise ValueError("factors are not coprime mod p")
    inv = pow(one[0], -1, p)
    a = [x * inv % p for x in a]
    b = [x * inv % p for x in b]
    R, S = list(R0), list(S0)
    for k in range(1, K):
        m = p ** (k + 1)
        diff = _poly_sub(Q, _poly_mul(R, S, m), m)
        d = [(x // p**k) % p for x in diff]
        d = fpoly.trim(d)
        if not d:
            continue
        quo, r = fpoly.divmod_poly(fpoly.mul(b, d, p), R0, p)
        s = fpoly.add(fpoly.mul(a, d, p), fpoly.mul(quo, S0, p), p)
        R = _poly_sub(R, [-x * p**k for x in r], m)
        S = _poly_sub(S, [-x * p**k for x in s], m)
    mK = p**K
    return [x % mK for x in fpoly.trim(R) or [0]], [x % mK for x in fpoly.trim(S) or [0]]


@dataclass(frozen=True)
class UnitRoots:
    """Unit-root factor R(X) of Q(X) mod p^K and, when R splits over F_p
    with simple roots, the individual roots."""

    p: int
    prec: int
    factor: tuple[int, ...]
    roots: tuple[PadicScalar, ...] | None


def unit_root_factor(Z: ZetaNumerator, K: int, *, require_ordinary: bool = True) -> UnitRoots:
    """Slope-0 factor of Q(X) = X^{2g} P(1/X), lifted to p^K.

    Raises NotOrdinary when there are fewer than g unit roots, unless
    ``require_ordinary`` is off; with no unit root at all it always raises.
    """
    p, g = Z.p, Z.genus
    u = Z.unit_root_count()
    if u == 0 or (require_ordinary and u != g):
        raise NotOrdinary(f"{u} unit roots, expected {g}: the fiber is not ordinary at {p}")
    Q = Z.reversed_poly()
    Qbar = [x % p for x in Q]
    # Qbar = X^(2g-u) Rbar; Rbar is monic of degree u with Rbar(0) != 0
    Rbar = Qbar[2 * g - u:]
    Sbar = [0] * (2 * g - u) + [1]
    mK = p**K
    R, _ = hensel_factor([x % mK for x in Q], Rbar, Sbar, p, K)
    R = R + [0] * (u + 1 - len(R))
    roots = None
    rr = fpoly.roots(Rbar, p)
    if len(rr) == u:
        dR = fpoly.derivative(Rbar, p)
        if all(fpoly.evaluate(dR, r, p) for r in rr):
            roots = tuple(sorted((_newton_root(R, r, p, K) for r in rr), key=lambda s: s.residue))
    return UnitRoots(p, K, tuple(R), roots)


def _newton_root(R, r0, p, K):
    m = p**K
    dR = [(k * c) % m for k, c in enumerate(R)][1:]
    x = r0
    for _ in range(K.bit_length() + 1):
        fx = sum(c * pow(x, k, m) for k, c in enumerate(R)) % m
        dx = sum(c * pow(x, k, m) for k, c in enumerate(dR)) % m
        x = (x - fx * pow(dx, -1, m)) % m
    return PadicScalar(p, K, x)


def poly_from_roots(values, p: int, K: int) -> tuple[int, ...]:
    """prod (X - v) mod p^K, constant term first."""
    m = p**K
    out = [1]
    for v in values:
        r = v.residue if isinstance(v, PadicScalar) else v
        out = _poly_mul(out, [(-r) % m, 1], m)
    return tuple(out)
