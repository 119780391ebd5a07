"""Exact integer linear algebra for rank-2 sublattices of Z^2.

Everything here runs on Python ints, so intermediate products never
overflow.  The two workhorses are `normalize_basis`, which brings any
pair of independent vectors into the canonical triangular form
((s_-1, 0), (s_0, p_0)), and `kernel_of_pair_map`, which computes the
kernel of a map Z^2 -> H for a finite abelian group H.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

IntPair = tuple[int, int]


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g.

    By convention ext_gcd(0, 0) == (0, 1, 0); callers must guard the
    degenerate case themselves.
    """
    u, next_u = 1, 0
    v, next_v = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        u, next_u = next_u, u - q * next_u
        v, next_v = next_v, v - q * next_v
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, u, v = -g, -u, -v
    return g, u, v


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups Z/m_1 x ... x Z/m_t, each m_i >= 1.

    Elements are tuples of length t, reduced componentwise.
    """

    moduli: tuple[int, ...]

    def __post_init__(self):
        if any(m < 1 for m in self.moduli):
            raise ValueError(f"moduli must be >= 1, got {self.moduli}")

    @property
    def arity(self) -> int:
        return len(self.moduli)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.moduli)

    def is_trivial(self) -> bool:
        return all(m == 1 for m in self.moduli)

    def order(self) -> int:
        n = 1
        for m in self.moduli:
            n *= m
        return n

    def reduce(self, elem) -> tuple[int, ...]:
        if len(elem) != len(self.moduli):
            raise ValueError(f"element {elem!r} has wrong arity for moduli {self.moduli}")
        return tuple(int(e) % m for e, m in zip(elem, self.moduli))

    def add(self, x, y) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x) -> tuple[int, ...]:
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def scale(self, k: int, x) -> tuple[int, ...]:
        return tuple((k * a) % m for a, m in zip(x, self.moduli))

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All group elements (intended for small groups in tests)."""
        def rec(i):
            if i == len(self.moduli):
                yield ()
                return
            for rest in rec(i + 1):
                for r in range(self.moduli[i]):
                    yield (r,) + rest
        return rec(0)


TRIVIAL_GROUP = FiniteAbelianGroup(())


@dataclass(frozen=True)
class Basis2:
    """Canonical basis of a full-rank sublattice of Z^2.

    e_minus1 = (s_-1, 0) with s_-1 > 0, and e_0 = (s_0, p_0) with
    p_0 > 0 and 0 <= s_0 < s_-1.  The determinant s_-1 * p_0 equals the
    index of the lattice in Z^2.
    """

    e_minus1: IntPair
    e_0: IntPair

    def __post_init__(self):
        (s1, z), (s0, p0) = self.e_minus1, self.e_0
        if z != 0 or s1 <= 0:
            raise ValueError(f"e_minus1 must be (s,0) with s>0, got {self.e_minus1}")
        if p0 <= 0 or not 0 <= s0 < s1:
            raise ValueError(f"e_0 must have p_0>0 and 0<=s_0<s_-1, got {self.e_0}")

    @property
    def s_minus1(self) -> int:
        return self.e_minus1[0]

    @property
    def s_0(self) -> int:
        return self.e_0[0]

    @property
    def p_0(self) -> int:
        return self.e_0[1]

    @property
    def det(self) -> int:
        return self.s_minus1 * self.p_0

    def contains(self, v: IntPair) -> bool:
        """Membership test: v is an integer combination of the basis."""
        s, p = v
        if p % self.p_0:
            return False
        mu = p // self.p_0
        return (s - mu * self.s_0) % self.s_minus1 == 0

    def points(self, bound: int) -> Iterator[IntPair]:
        """Nonzero lattice points with |s| <= bound, |p| <= bound and
        (s, p) lexicographically positive (s > 0, or s = 0 and p > 0).

        Each point appears once; its negative is skipped.
        """
        for mu in range(-(bound // self.p_0), bound // self.p_0 + 1):
            p = mu * self.p_0
            base = mu * self.s_0
            lam_lo = -((bound + base) // self.s_minus1)
            lam_hi = (bound - base) // self.s_minus1
            for lam in range(lam_lo, lam_hi + 1):
                s = lam * self.s_minus1 + base
                if abs(s) > bound:
                    continue
                if s > 0 or (s == 0 and p > 0):
                    yield (s, p)


def normalize_basis(v1: IntPair, v2: IntPair) -> Basis2:
    """Canonical basis of the lattice spanned by v1, v2.

    Fails if v1, v2 are linearly dependent.  The result spans exactly
    the same lattice: s_-1 is the least positive s with (s, 0) in the
    lattice, p_0 the least positive second coordinate, and s_0 the
    representative of its class in [0, s_-1).
    """
    det = v1[0] * v2[1] - v1[1] * v2[0]
    if det == 0:
        raise ValueError(f"vectors {v1}, {v2} are linearly dependent")
    p0, u, v = ext_gcd(v1[1], v2[1])
    if p0 == 0:
        # both second coordinates zero: rank 1, caught by det above
        raise ValueError(f"vectors {v1}, {v2} are linearly dependent")
    w_s = u * v1[0] + v * v2[0]
    s_minus1 = abs(det) // p0
    s0 = w_s % s_minus1
    return Basis2((s_minus1, 0), (s0, p0))


def _congruence_kernel(a: int, b: int, m: int) -> tuple[IntPair, IntPair]:
    """Basis of {(x, y) in Z^2 : x*a + y*b == 0 mod m}, m >= 1."""
    if m == 1:
        return (1, 0), (0, 1)
    a %= m
    b %= m
    da, _, _ = ext_gcd(a, m)          # da = gcd(a, m) > 0
    g, _, _ = ext_gcd(b, da)          # g = gcd(a, b, m) > 0
    y0 = da // g
    # solve x*a == -y0*b (mod m); da divides y0*b by construction
    c = (-y0 * b) % m
    m_red = m // da
    if m_red == 1:
        x0 = 0
    else:
        _, inv, _ = ext_gcd((a // da) % m_red, m_red)
        x0 = ((c // da) * inv) % m_red
    return (m // da, 0), (x0, y0)


def kernel_of_pair_map(col_s, col_p, group: FiniteAbelianGroup) -> Basis2:
    """Canonical basis of {(s, p) in Z^2 : s*col_s - p*col_p = 0 in group}.

    col_s and col_p are the group images of (1, 0) and (0, 1).  The
    kernel always has full rank since it contains M*Z^2 for M the
    product of the moduli.
    """
    col_s = group.reduce(col_s)
    col_p = group.reduce(col_p)
    f1: IntPair = (1, 0)
    f2: IntPair = (0, 1)
    for u, w, m in zip(col_s, col_p, group.moduli):
        if m == 1:
            continue
        a = (f1[0] * u - f1[1] * w) % m
        b = (f2[0] * u - f2[1] * w) % m
        k1, k2 = _congruence_kernel(a, b, m)
        g1 = (k1[0] * f1[0] + k1[1] * f2[0], k1[0] * f1[1] + k1[1] * f2[1])
        g2 = (k2[0] * f1[0] + k2[1] * f2[0], k2[0] * f1[1] + k2[1] * f2[1])
        basis = normalize_basis(g1, g2)
        f1, f2 = basis.e_minus1, basis.e_0
    return normalize_basis(f1, f2)
