"""Independent verification oracle.

Everything here re-checks emitted objects without trusting how they
were produced: direct lattice membership, a Buchberger completion
engine specialised to differences of monomials, exhaustive bounded
enumeration of lattice points for ideal-equality certification, and a
leave-one-out redundancy probe.

The engine works on ordered pairs (head, tail) of monomials with
head > tail in the term order; S-pairs and reductions of such pairs
stay pairs (or vanish), so no general polynomial arithmetic is needed.
Coefficients never enter: binomials are monic with signs +-1, which is
valid over any field.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .binomials import Binomial, Monomial, TermOrder, TieBreak, binomial_of_pair
from .lattice import Basis2
from .model import ProblemSpec, relation_lattice, weights

Pair = tuple[Monomial, Monomial]

DEFAULT_PAIR_CAP = 10_000


class CompletionCapError(RuntimeError):
    """Raised when Buchberger completion exceeds its S-pair budget."""


def in_lattice(w: Sequence[int], problem: ProblemSpec) -> bool:
    """Whether sum_i w_i * gen_i = 0 in Z^n (+) H.

    Coordinates of w follow (x_1..x_n, z, y): the first n entries
    multiply the axis generators a_i*e_i, then b (z), then c (y).
    """
    if len(w) != problem.n + 2:
        raise ValueError(f"vector has length {len(w)}, expected {problem.n + 2}")
    wx, wz, wy = w[: problem.n], w[problem.n], w[problem.n + 1]
    for j in range(problem.n):
        if wx[j] * problem.a[j] + wz * problem.b[j] + wy * problem.c[j] != 0:
            return False
    group = problem.group
    acc = group.scale(wz, group.reduce(problem.z_torsion))
    acc = group.add(acc, group.scale(wy, group.reduce(problem.y_torsion)))
    for j in range(problem.n):
        acc = group.add(acc, group.scale(wx[j], group.reduce(problem.axis_torsion(j))))
    return acc == group.identity


def binomial_in_lattice(binomial: Binomial, problem: ProblemSpec) -> bool:
    """Lattice membership of a binomial's exponent-difference vector,
    plus homogeneity under the positive grading."""
    if not in_lattice(binomial.exponent_vector(), problem):
        return False
    w = weights(problem)
    return binomial.lhs.weight(w) == binomial.rhs.weight(w)


def _orient(m1: Monomial, m2: Monomial, order: TermOrder) -> Optional[Pair]:
    if m1 == m2:
        return None
    return (m1, m2) if order.greater(m1, m2) else (m2, m1)


def as_pair(binomial: Binomial, order: TermOrder) -> Pair:
    pair = _orient(binomial.lhs, binomial.rhs, order)
    if pair is None:
        raise ValueError(f"degenerate binomial {binomial.render()}")
    return pair


def s_pair(f: Pair, g: Pair, order: TermOrder) -> Optional[Pair]:
    """S-polynomial of two monomial differences; a difference again, or None."""
    l = f[0].lcm(g[0])
    return _orient(l.div(f[0]).mul(f[1]), l.div(g[0]).mul(g[1]), order)


def _monomial_nf(mono: Monomial, basis: Sequence[Pair]) -> Monomial:
    changed = True
    while changed:
        changed = False
        for head, tail in basis:
            if head.divides(mono):
                mono = mono.div(head).mul(tail)
                changed = True
                break
    return mono


def normal_form(f: Optional[Pair], basis: Sequence[Pair], order: TermOrder) -> Optional[Pair]:
    """Full division remainder of f by basis; None encodes zero."""
    if f is None:
        return None
    head, tail = f
    while True:
        for bh, bt in basis:
            if bh.divides(head):
                head = head.div(bh).mul(bt)
                break
        else:
            break
        if head == tail:
            return None
        if order.greater(tail, head):
            head, tail = tail, head
    tail = _monomial_nf(tail, basis)
    assert head != tail, "tail reduction climbed back to the head"
    return head, tail


def spair_and_reduce(f: Binomial, g: Binomial, basis: Sequence[Binomial],
                     order: TermOrder) -> Optional[Pair]:
    """Normal form of the S-polynomial of f and g modulo basis."""
    pairs = [as_pair(b, order) for b in basis]
    return normal_form(s_pair(as_pair(f, order), as_pair(g, order), order), pairs, order)


def _coprime(m1: Monomial, m2: Monomial) -> bool:
    return (min(m1.e_z, m2.e_z) == 0 and min(m1.e_y, m2.e_y) == 0
            and all(min(a, b) == 0 for a, b in zip(m1.e_x, m2.e_x)))


def buchberger_complete(basis: Sequence[Binomial], order: TermOrder,
                        pair_cap: int = DEFAULT_PAIR_CAP) -> list[Pair]:
    """Complete a binomial set to a Groebner basis of the same ideal.

    Every added element is a reduced S-pair, so the ideal is unchanged.
    Exceeding pair_cap raises CompletionCapError; there is no silent
    truncation.
    """
    g: list[Pair] = [as_pair(b, order) for b in basis]
    queue = deque((i, j) for j in range(len(g)) for i in range(j))
    processed = 0
    while queue:
        processed += 1
        if processed > pair_cap:
            raise CompletionCapError(f"S-pair budget {pair_cap} exceeded")
        i, j = queue.popleft()
        if _coprime(g[i][0], g[j][0]):
            continue
        r = normal_form(s_pair(g[i], g[j], order), g, order)
        if r is None:
            continue
        g.append(r)
        queue.extend((k, len(g) - 1) for k in range(len(g) - 1))
    return g


def is_groebner(basis: Sequence[Binomial], order: TermOrder,
                pair_cap: int = DEFAULT_PAIR_CAP) -> bool:
    """Whether every S-pair of the set reduces to zero modulo the set
    itself (Buchberger's criterion), without enlarging it."""
    pairs = [as_pair(b, order) for b in basis]
    checked = 0
    for j in range(len(pairs)):
        for i in range(j):
            checked += 1
            if checked > pair_cap:
                raise CompletionCapError(f"S-pair budget {pair_cap} exceeded")
            if _coprime(pairs[i][0], pairs[j][0]):
                continue
            if normal_form(s_pair(pairs[i], pairs[j], order), pairs, order) is not None:
                return False
    return True


def _emitted_vectors(emitted: Sequence[Binomial]) -> list[tuple[int, int]]:
    out = []
    for b in emitted:
        s = b.lhs.e_z - b.rhs.e_z
        p = -(b.lhs.e_y - b.rhs.e_y)
        out.append((s, p))
    return out


def ideal_equality_bounded(emitted: Sequence[Binomial], problem: ProblemSpec,
                           bound: int, order: TermOrder | None = None,
                           pair_cap: int = DEFAULT_PAIR_CAP,
                           basis: Basis2 | None = None) -> bool:
    """Certify that `emitted` generates every lattice binomial within
    the coordinate bound.

    Enumerates all lattice points lam1*eps_-1 + lam2*eps_0 with
    |s|, |p| <= bound (up to global sign) and reduces each induced
    binomial modulo the Buchberger completion of `emitted`.
    """
    if order is None:
        order = TermOrder(weights(problem))
    if basis is None:
        basis = relation_lattice(problem)
    top = max((max(abs(s), abs(p)) for s, p in _emitted_vectors(emitted)), default=0)
    if bound < top:
        raise ValueError(f"bound {bound} is below the largest emitted coordinate {top}")
    completed = buchberger_complete(emitted, order, pair_cap)
    for point in basis.points(bound):
        b = binomial_of_pair(point, problem)
        if normal_form(as_pair(b, order), completed, order) is not None:
            return False
    return True


def no_forbidden_binomials(problem: ProblemSpec, bound: int,
                           basis: Basis2 | None = None) -> bool:
    """Scan all lattice binomials within the bound for shape violations:
    a pure x-monomial opposite a monomial mixing z/y with x's, or a
    strictly mixed quotient vector that is not sign-split in slope
    order."""
    if basis is None:
        basis = relation_lattice(problem)
    for point in basis.points(bound):
        try:
            binomial_of_pair(point, problem)
        except (ValueError, AssertionError):
            return False
    return True


def redundancy_probe(emitted: Sequence[Binomial], order: TermOrder,
                     pair_cap: int = DEFAULT_PAIR_CAP) -> list[bool]:
    """For each generator: does it reduce to zero modulo the completion
    of the others?  True flags a redundant generator at this order."""
    if len(emitted) < 2:
        raise ValueError("redundancy probe needs at least two generators")
    out = []
    for k, g in enumerate(emitted):
        rest = [b for i, b in enumerate(emitted) if i != k]
        completed = buchberger_complete(rest, order, pair_cap)
        out.append(normal_form(as_pair(g, order), completed, order) is None)
    return out


@dataclass(frozen=True)
class VerificationReport:
    all_generators_in_lattice: bool
    gb_certified: tuple[tuple[str, bool], ...]
    ideal_equality_bound: int
    ideal_equality_ok: bool
    forbidden_form_ok: bool
    redundancy: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return (self.all_generators_in_lattice and self.ideal_equality_ok
                and self.forbidden_form_ok)


def run_verification(problem: ProblemSpec, generators: Sequence[Binomial],
                     bound: int = 12,
                     tie_breaks: Sequence[TieBreak] = (TieBreak.REVLEX_Z_SMALLEST,
                                                       TieBreak.LEX_Z_LARGEST),
                     pair_cap: int = DEFAULT_PAIR_CAP) -> VerificationReport:
    """Run the full oracle suite against an emitted generator set."""
    w = weights(problem)
    basis = relation_lattice(problem)
    in_lat = all(binomial_in_lattice(b, problem) for b in generators)
    gb = tuple(
        (tb.value, is_groebner(generators, TermOrder(w, tb), pair_cap))
        for tb in tie_breaks
    )
    default_order = TermOrder(w, tie_breaks[0])
    equal = ideal_equality_bounded(generators, problem, bound, default_order,
                                   pair_cap, basis)
    clean = no_forbidden_binomials(problem, bound, basis)
    redundancy = tuple(
        (b.render(), red)
        for b, red in zip(generators,
                          redundancy_probe(generators, default_order, pair_cap))
    )
    return VerificationReport(
        all_generators_in_lattice=in_lat,
        gb_certified=gb,
        ideal_equality_bound=bound,
        ideal_equality_ok=equal,
        forbidden_form_ok=clean,
        redundancy=redundancy,
    )
