"""Binomials of the lattice ideal: construction, classification,
term orders and the defining-generator list.

A lattice pair (s, p) with s >= 0 induces one binomial: with
v_i = (s*b_i - p*c_i)/a_i,

    p >= 0:   z^s x^{v-}  -  y^p x^{v+}
    p <  0:   z^s y^{-p} x^{v-}  -  x^{v+}

The canonical orientation puts the z-bearing monomial first and a pure
x-monomial always second.  Every binomial falls into exactly one of
four shapes; strictly mixed quotient vectors produce the SPLIT shape,
whose presence is precisely the failure of the Cohen-Macaulay property.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .fan import FanDecomposition
from .lattice import IntPair
from .model import ProblemSpec, WeightVector, in_relation_lattice, slope_permutation, weights


class Form(enum.Enum):
    Z_PURE = "z_pure"        # z^s - y^p x^v
    Y_PURE = "y_pure"        # y^p - z^s x^v
    ZY_MIXED = "zy_mixed"    # y^p z^s - x^v
    SPLIT = "split"          # z^s x^{v-} - y^p x^{v+}, both x-parts nonzero


@dataclass(frozen=True)
class Monomial:
    """Monomial of K[y, z, x_1..x_n] with nonnegative exponents."""

    e_z: int
    e_y: int
    e_x: tuple[int, ...]

    def __post_init__(self):
        if self.e_z < 0 or self.e_y < 0 or any(e < 0 for e in self.e_x):
            raise ValueError(f"negative exponent in monomial {self}")

    def weight(self, w: WeightVector) -> int:
        return (self.e_z * w.w_z + self.e_y * w.w_y
                + sum(e * wx for e, wx in zip(self.e_x, w.w_x)))

    def mul(self, other: Monomial) -> Monomial:
        return Monomial(self.e_z + other.e_z, self.e_y + other.e_y,
                        tuple(a + b for a, b in zip(self.e_x, other.e_x)))

    def divides(self, other: Monomial) -> bool:
        return (self.e_z <= other.e_z and self.e_y <= other.e_y
                and all(a <= b for a, b in zip(self.e_x, other.e_x)))

    def div(self, other: Monomial) -> Monomial:
        return Monomial(self.e_z - other.e_z, self.e_y - other.e_y,
                        tuple(a - b for a, b in zip(self.e_x, other.e_x)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.e_z, other.e_z), max(self.e_y, other.e_y),
                        tuple(max(a, b) for a, b in zip(self.e_x, other.e_x)))

    def is_one(self) -> bool:
        return self.e_z == 0 and self.e_y == 0 and not any(self.e_x)

    def render(self) -> str:
        parts = []
        if self.e_z:
            parts.append("z" if self.e_z == 1 else f"z^{self.e_z}")
        if self.e_y:
            parts.append("y" if self.e_y == 1 else f"y^{self.e_y}")
        for i, e in enumerate(self.e_x, start=1):
            if e:
                parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


class TieBreak(enum.Enum):
    REVLEX_Z_SMALLEST = "revlex_z_smallest"
    LEX_Z_LARGEST = "lex_z_largest"


@dataclass(frozen=True)
class TermOrder:
    """Weight-graded monomial order; ties broken by the chosen scheme.

    REVLEX_Z_SMALLEST is reverse-lexicographic with z < y < x_1 < ... < x_n;
    LEX_Z_LARGEST is lexicographic with z > y > x_1 > ... > x_n.
    Both are total, multiplicative, and refine the weight grading.
    """

    weights: WeightVector
    tie_break: TieBreak = TieBreak.REVLEX_Z_SMALLEST

    def key(self, mono: Monomial):
        w = mono.weight(self.weights)
        if self.tie_break is TieBreak.REVLEX_Z_SMALLEST:
            # larger = last nonzero exponent difference on the small-variable
            # end is negative; encode by negating and scanning z, y, x_1, ...
            return (w, (-mono.e_z, -mono.e_y) + tuple(-e for e in mono.e_x))
        return (w, (mono.e_z, mono.e_y) + tuple(mono.e_x))

    def greater(self, m1: Monomial, m2: Monomial) -> bool:
        return self.key(m1) > self.key(m2)


@dataclass(frozen=True)
class Binomial:
    """Difference of two monomials with disjoint supports."""

    lhs: Monomial
    rhs: Monomial
    form: Form

    def render(self) -> str:
        return f"{self.lhs.render()} - {self.rhs.render()}"

    def signless_key(self):
        """Hashable key identifying the binomial up to global sign."""
        k1 = (self.lhs.e_z, self.lhs.e_y) + self.lhs.e_x
        k2 = (self.rhs.e_z, self.rhs.e_y) + self.rhs.e_x
        return (min(k1, k2), max(k1, k2))

    def exponent_vector(self) -> tuple[int, ...]:
        """Difference lhs - rhs ordered (x_1..x_n, z, y)."""
        xs = tuple(a - b for a, b in zip(self.lhs.e_x, self.rhs.e_x))
        return xs + (self.lhs.e_z - self.rhs.e_z, self.lhs.e_y - self.rhs.e_y)


def quotient_vector(sp: IntPair, problem: ProblemSpec) -> tuple[int, ...]:
    """v with v_i = (s*b_i - p*c_i)/a_i; requires sp in the lattice."""
    s, p = sp
    if not in_relation_lattice(sp, problem):
        raise ValueError(f"pair {sp} is not in the relation lattice")
    return tuple((s * bi - p * ci) // ai
                 for ai, bi, ci in zip(problem.a, problem.b, problem.c))


def _classify(s: int, p: int, v: tuple[int, ...], problem: ProblemSpec) -> Form:
    v_neg_zero = all(x >= 0 for x in v)
    v_pos_zero = all(x <= 0 for x in v)
    if p < 0:
        if not v_neg_zero:
            raise ValueError(
                f"binomial of pair ({s}, {p}) would put x's against a pure"
                " x-monomial; no such binomial exists in the ideal"
            )
        return Form.ZY_MIXED if s > 0 and p < 0 else Form.Y_PURE
    if v_neg_zero:
        return Form.Z_PURE if s > 0 else Form.Y_PURE
    if v_pos_zero:
        return Form.Y_PURE if p > 0 else Form.Z_PURE
    # strictly mixed: negative entries must precede the rest in slope order
    perm = slope_permutation(problem)
    seen_nonneg = False
    for j in perm:
        if v[j] >= 0:
            seen_nonneg = True
        elif seen_nonneg:
            raise AssertionError(
                f"mixed quotient vector {v} is not sign-split in slope order"
            )
    return Form.SPLIT


def binomial_of_pair(sp: IntPair, problem: ProblemSpec) -> Binomial:
    """The binomial attached to a lattice pair (s, p) with s >= 0."""
    s, p = sp
    if s < 0:
        raise ValueError(f"pair {sp} must have s >= 0")
    if s == 0 and p == 0:
        raise ValueError("the zero pair does not induce a binomial")
    v = quotient_vector(sp, problem)
    v_plus = tuple(max(x, 0) for x in v)
    v_minus = tuple(max(-x, 0) for x in v)
    form = _classify(s, p, v, problem)
    if p >= 0:
        mono_z = Monomial(s, 0, v_minus)
        mono_y = Monomial(0, p, v_plus)
        # z-bearing side first; with s = 0 the y-side leads so that the
        # pure x-monomial always comes second
        lhs, rhs = (mono_z, mono_y) if s > 0 else (mono_y, mono_z)
    else:
        lhs = Monomial(s, -p, v_minus)
        rhs = Monomial(0, 0, v_plus)
    return Binomial(lhs, rhs, form)


def classify_binomial(binomial: Binomial, problem: ProblemSpec) -> Form:
    """Re-derive the shape of a binomial from its exponents."""
    s = binomial.lhs.e_z - binomial.rhs.e_z
    p_signed = binomial.rhs.e_y - binomial.lhs.e_y  # positive when y opposes z
    if binomial.lhs.e_y and binomial.rhs.e_y:
        raise ValueError("monomials share the variable y")
    if binomial.rhs.e_z:
        raise ValueError("canonical orientation puts z in the first monomial")
    v = tuple(b - a for a, b in zip(binomial.lhs.e_x, binomial.rhs.e_x))
    if binomial.lhs.e_y:
        return _classify(s, -binomial.lhs.e_y, v, problem)
    return _classify(s, p_signed, v, problem)


def leading_monomial(binomial: Binomial, order: TermOrder) -> Monomial:
    """The larger monomial; the two sides are never equal."""
    if binomial.lhs == binomial.rhs:
        raise ValueError("binomial has equal monomials")
    return binomial.lhs if order.greater(binomial.lhs, binomial.rhs) else binomial.rhs


def is_cm(fan: FanDecomposition) -> bool:
    """Cohen-Macaulay exactly when no ray has a strictly mixed quotient
    vector, i.e. the nonnegative and nonpositive columns meet."""
    return fan.mu == fan.nu + 1


@dataclass(frozen=True)
class GeneratorReport:
    """Defining binomials of the lattice ideal plus the fan indices used."""

    is_cm: bool
    tau: int
    generators: tuple[Binomial, ...]
    lattice_vectors: tuple[IntPair, ...]
    nu: int
    mu: int


def ideal_generators(fan: FanDecomposition, problem: ProblemSpec) -> GeneratorReport:
    """Emit the defining generators.

    Cohen-Macaulay case: the three binomials of eps_nu, eps_{nu+1} and
    their difference.  Otherwise: the binomials of eps_nu..eps_mu
    (clamped to the fan) together with the interpolating differences
    eps_i - j*eps_{i+1} for 1 <= j < q_{i+2}; consecutive difference
    series overlap at their endpoints, so vectors are deduplicated.
    The emitted set is symmetric under the z/y mirror.
    """
    cm = is_cm(fan)
    vectors: list[IntPair] = []

    def push(v: IntPair):
        if v not in vectors:
            vectors.append(v)

    if cm:
        if not any(fan.v(fan.nu)):
            # all slopes coincide and a ray sits on the common line: its
            # quotient vector is zero and the z^s - y^p binomial rewrites
            # z-powers into y-powers.  Emit the ray with its two
            # neighbours; this choice is symmetric under the z/y mirror.
            for i in (fan.nu - 1, fan.nu, fan.nu + 1):
                push(fan.ray(i))
        else:
            e0, e1 = fan.ray(fan.nu), fan.ray(fan.nu + 1)
            push(e0)
            push(e1)
            push((e0[0] - e1[0], e0[1] - e1[1]))
    else:
        hi = min(fan.mu, fan.m + 1)
        for i in range(fan.nu, hi + 1):
            push(fan.ray(i))
        for i in range(fan.nu, min(fan.mu - 2, fan.m - 1) + 1):
            ei, en = fan.ray(i), fan.ray(i + 1)
            for j in range(1, fan.q(i + 2)):
                push((ei[0] - j * en[0], ei[1] - j * en[1]))

    gens = tuple(binomial_of_pair(v, problem) for v in vectors)
    return GeneratorReport(
        is_cm=cm,
        tau=len(gens),
        generators=gens,
        lattice_vectors=tuple(vectors),
        nu=fan.nu,
        mu=fan.mu,
    )
