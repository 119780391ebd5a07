"""Problem data for height-two simplicial lattice ideals.

A problem is given by exponent data (a, b, c) with optional torsion:
the ambient ring is K[y, z, x_1..x_n], the semigroup S in N^n (+) H is
generated by the axis vectors a_i*e_i together with b (attached to z)
and c (attached to y), and the relation lattice is determined by the
rank-2 sublattice of pairs (s, p) such that s*b - p*c lands in the span
of the axis generators.

Role convention: z carries the exponent vector b and pairs with the
s-coordinate; y carries c and pairs with p.  This is the unique
assignment under which v_i = (s*b_i - p*c_i)/a_i makes the induced
binomials weight-balanced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    TRIVIAL_GROUP,
    Basis2,
    FiniteAbelianGroup,
    IntPair,
    ext_gcd,
    kernel_of_pair_map,
    normalize_basis,
)


class InvalidProblemError(ValueError):
    """Raised when input exponent data violates a defining condition."""


@dataclass(frozen=True)
class TorsionData:
    """Finite abelian group H plus the generator images.

    h_x[i] is attached to the axis generator a_i*e_i, h_z to b and h_y
    to c.  All elements are stored reduced.
    """

    group: FiniteAbelianGroup
    h_x: tuple[tuple[int, ...], ...]
    h_z: tuple[int, ...]
    h_y: tuple[int, ...]


@dataclass(frozen=True)
class ProblemSpec:
    """Exponent data (a, b, c) of a height-two simplicial lattice ideal."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    torsion: TorsionData | None = None

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.torsion.group if self.torsion else TRIVIAL_GROUP

    def axis_torsion(self, i: int) -> tuple[int, ...]:
        return self.torsion.h_x[i] if self.torsion else ()

    @property
    def z_torsion(self) -> tuple[int, ...]:
        return self.torsion.h_z if self.torsion else ()

    @property
    def y_torsion(self) -> tuple[int, ...]:
        return self.torsion.h_y if self.torsion else ()


@dataclass(frozen=True)
class SemigroupElement:
    """A vector in Z^n plus a torsion component."""

    coords: tuple[int, ...]
    tors: tuple[int, ...] = ()


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive grading making every lattice binomial homogeneous."""

    w_z: int
    w_y: int
    w_x: tuple[int, ...]


def validate(problem: ProblemSpec) -> ProblemSpec:
    """Check the defining conditions, returning the problem unchanged.

    Raises InvalidProblemError naming the first violated condition.
    """
    n = problem.n
    if n < 1:
        raise InvalidProblemError("need at least one axis variable")
    if len(problem.b) != n or len(problem.c) != n:
        raise InvalidProblemError(
            f"a, b, c must have equal length, got {n}, {len(problem.b)}, {len(problem.c)}"
        )
    for i, ai in enumerate(problem.a):
        if ai < 1:
            raise InvalidProblemError(f"a[{i}] = {ai} must be >= 1")
    for i, (bi, ci) in enumerate(zip(problem.b, problem.c)):
        if bi < 0 or ci < 0:
            raise InvalidProblemError(f"(b[{i}], c[{i}]) = ({bi}, {ci}) must be nonnegative")
        if bi == 0 and ci == 0:
            raise InvalidProblemError(f"(b[{i}], c[{i}]) = (0, 0) is not allowed")
    if not any(problem.b):
        raise InvalidProblemError("b must be nonzero")
    if not any(problem.c):
        raise InvalidProblemError("c must be nonzero")
    if problem.torsion is not None:
        t = problem.torsion
        if len(t.h_x) != n:
            raise InvalidProblemError(f"torsion needs {n} axis images, got {len(t.h_x)}")
        for name, elem in [("h_z", t.h_z), ("h_y", t.h_y)] + [
            (f"h_x[{i}]", e) for i, e in enumerate(t.h_x)
        ]:
            if len(elem) != t.group.arity:
                raise InvalidProblemError(f"torsion element {name} has wrong arity")
            if t.group.reduce(elem) != tuple(elem):
                raise InvalidProblemError(f"torsion element {name} is not reduced")
    return problem


def slope_permutation(problem: ProblemSpec) -> tuple[int, ...]:
    """0-based permutation putting the slopes b_i/c_i in nondecreasing
    order (c_i = 0 counts as slope +infinity); ties keep original order.
    """
    def key(i):
        if problem.c[i] == 0:
            return (1, 0, i)
        return (0, Fraction(problem.b[i], problem.c[i]), i)

    return tuple(sorted(range(problem.n), key=key))


def relation_lattice(problem: ProblemSpec) -> Basis2:
    """Canonical basis of the rank-2 lattice of pairs (s, p) with
    a_i | s*b_i - p*c_i for all i and, when torsion is present,
    s*h_z - p*h_y - sum_i v_i*h_x[i] = 0 in H for v_i = (s*b_i - p*c_i)/a_i.
    """
    group_a = FiniteAbelianGroup(problem.a)
    basis = kernel_of_pair_map(problem.b, problem.c, group_a)
    if problem.torsion is None or problem.torsion.group.is_trivial():
        return basis

    tors = problem.torsion
    group = tors.group

    def character(v: IntPair) -> tuple[int, ...]:
        s, p = v
        acc = group.scale(s, tors.h_z)
        acc = group.add(acc, group.scale(-p, tors.h_y))
        for i, ai in enumerate(problem.a):
            vi = (s * problem.b[i] - p * problem.c[i]) // ai
            acc = group.add(acc, group.scale(-vi, tors.h_x[i]))
        return acc

    k1, k2 = basis.e_minus1, basis.e_0
    coeff = kernel_of_pair_map(character(k1), group.neg(character(k2)), group)
    (a1, b1), (a2, b2) = coeff.e_minus1, coeff.e_0
    g1 = (a1 * k1[0] + b1 * k2[0], a1 * k1[1] + b1 * k2[1])
    g2 = (a2 * k1[0] + b2 * k2[0], a2 * k1[1] + b2 * k2[1])
    return normalize_basis(g1, g2)


def in_relation_lattice(v: IntPair, problem: ProblemSpec) -> bool:
    """Direct membership test (divisibility plus torsion character)."""
    s, p = v
    quotients = []
    for ai, bi, ci in zip(problem.a, problem.b, problem.c):
        num = s * bi - p * ci
        if num % ai:
            return False
        quotients.append(num // ai)
    if problem.torsion is not None:
        group = problem.torsion.group
        acc = group.scale(s, problem.torsion.h_z)
        acc = group.add(acc, group.scale(-p, problem.torsion.h_y))
        for vi, hx in zip(quotients, problem.torsion.h_x):
            acc = group.add(acc, group.scale(-vi, hx))
        return acc == group.identity
    return True


def weights(problem: ProblemSpec) -> WeightVector:
    """w_x_i = a_i, w_z = sum(b), w_y = sum(c); every lattice binomial
    is homogeneous under this grading.
    """
    return WeightVector(w_z=sum(problem.b), w_y=sum(problem.c), w_x=tuple(problem.a))


def semigroup_generators(problem: ProblemSpec) -> list[SemigroupElement]:
    """The n+2 generators of S: axis vectors, then z's vector b, then y's c."""
    group = problem.group
    gens = []
    for i, ai in enumerate(problem.a):
        coords = tuple(ai if j == i else 0 for j in range(problem.n))
        gens.append(SemigroupElement(coords, group.reduce(problem.axis_torsion(i))))
    gens.append(SemigroupElement(tuple(problem.b), group.reduce(problem.z_torsion)))
    gens.append(SemigroupElement(tuple(problem.c), group.reduce(problem.y_torsion)))
    return gens


def semigroup_member(g: SemigroupElement, problem: ProblemSpec):
    """Exact membership decision for the semigroup S.

    Returns (e_z, e_y, m) with g = e_z*(b,h_z) + e_y*(c,h_y)
    + sum_i m_i*(a_i e_i, h_i), all coefficients nonnegative integers,
    or None when no such representation exists.  The search is complete:
    e_z is bounded by min over b_j > 0 of g_j // b_j, e_y likewise over
    c, and the leftover coordinates force the m_i by exact division.
    """
    coords = g.coords
    if len(coords) != problem.n:
        raise ValueError(f"element has {len(coords)} coordinates, expected {problem.n}")
    if any(x < 0 for x in coords):
        return None
    b, c, a = problem.b, problem.c, problem.a
    z_cap = min(coords[j] // b[j] for j in range(problem.n) if b[j] > 0)
    y_cap = min(coords[j] // c[j] for j in range(problem.n) if c[j] > 0)

    group = problem.group
    g_tors = group.reduce(g.tors) if problem.torsion else ()

    def try_pair(e_z: int, e_y: int):
        m = []
        for j in range(problem.n):
            rem = coords[j] - e_z * b[j] - e_y * c[j]
            if rem < 0 or rem % a[j]:
                return None
            m.append(rem // a[j])
        if problem.torsion is not None:
            acc = group.scale(e_z, problem.torsion.h_z)
            acc = group.add(acc, group.scale(e_y, problem.torsion.h_y))
            for mi, hx in zip(m, problem.torsion.h_x):
                acc = group.add(acc, group.scale(mi, hx))
            if acc != g_tors:
                return None
        return e_z, e_y, tuple(m)

    # iterate the smaller range outermost; the inner coefficient is only
    # scanned where the congruences m_j in Z allow it
    if z_cap <= y_cap:
        outer_cap, inner_cap, outer_is_z = z_cap, y_cap, True
        outer_vec, inner_vec = b, c
    else:
        outer_cap, inner_cap, outer_is_z = y_cap, z_cap, False
        outer_vec, inner_vec = c, b

    for e_out in range(outer_cap + 1):
        # congruences e_in * inner_vec[j] == coords[j] - e_out*outer_vec[j] (mod a_j)
        step, base = 1, 0
        feasible = True
        for j in range(problem.n):
            t = coords[j] - e_out * outer_vec[j]
            if t < 0:
                feasible = False
                break
            mod = a[j]
            cj = inner_vec[j] % mod
            tj = t % mod
            # solve e_in*cj == tj (mod mod) given e_in == base (mod step)
            # substitute e_in = base + step*u
            rhs = (tj - base * cj) % mod
            coef = (step * cj) % mod
            d, inv, _ = ext_gcd(coef, mod)
            if rhs % d:
                feasible = False
                break
            mod_red = mod // d
            if mod_red > 1:
                u0 = ((rhs // d) * inv) % mod_red
                base = base + step * u0
                step = step * mod_red
        if not feasible:
            continue
        e_in = base
        while e_in <= inner_cap:
            res = try_pair(e_out, e_in) if outer_is_z else try_pair(e_in, e_out)
            if res is not None:
                return res
            e_in += step
    return None
