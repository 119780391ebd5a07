"""Macaulayfication of the semigroup ring.

Each fan ray with a strictly mixed quotient vector witnesses a fraction
y^{p_i}/x^{v-} = z^{s_i}/x^{v+} that lies in the saturation but not in
the semigroup S itself; adjoining these elements yields the smallest
overring that is Cohen-Macaulay.  The Macaulayfication is trivial
exactly in the Cohen-Macaulay case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .binomials import GeneratorReport, ideal_generators, is_cm
from .fan import FanDecomposition
from .model import ProblemSpec, SemigroupElement, semigroup_generators, semigroup_member


def mixed_indices(fan: FanDecomposition) -> list[int]:
    """Ray indices whose quotient vector has entries of both signs."""
    return list(fan.mixed_range)


def new_semigroup_generators(fan: FanDecomposition, problem: ProblemSpec) -> list[SemigroupElement]:
    """One new semigroup element per mixed ray index.

    E_i is computed from the y-side as p_i*(c, h_y) - sum_j v-_j*(a_j e_j, h_j)
    and re-computed from the z-side as s_i*(b, h_z) - sum_j v+_j*(a_j e_j, h_j);
    both expressions must agree, have nonnegative coordinates, and lie
    outside S.
    """
    group = problem.group
    out = []
    for i in fan.mixed_range:
        v = fan.v(i)
        y_coords = [fan.p(i) * cj for cj in problem.c]
        z_coords = [fan.s(i) * bj for bj in problem.b]
        y_tors = group.scale(fan.p(i), group.reduce(problem.y_torsion))
        z_tors = group.scale(fan.s(i), group.reduce(problem.z_torsion))
        for j, (aj, vj) in enumerate(zip(problem.a, v)):
            if vj < 0:
                y_coords[j] -= (-vj) * aj
                y_tors = group.add(y_tors, group.scale(vj, group.reduce(problem.axis_torsion(j))))
            elif vj > 0:
                z_coords[j] -= vj * aj
                z_tors = group.add(z_tors, group.scale(-vj, group.reduce(problem.axis_torsion(j))))
        if y_coords != z_coords or y_tors != z_tors:
            raise AssertionError(
                f"two expressions for the new generator at ray {i} disagree: "
                f"{(y_coords, y_tors)} vs {(z_coords, z_tors)}"
            )
        if any(x < 0 for x in y_coords):
            raise AssertionError(f"new generator at ray {i} has a negative coordinate")
        elem = SemigroupElement(tuple(y_coords), y_tors)
        if semigroup_member(elem, problem) is not None:
            raise AssertionError(f"new generator {elem} already lies in the semigroup")
        out.append(elem)
    return out


@dataclass(frozen=True)
class MacaulayReport:
    """New generators and the enlarged semigroup."""

    mixed_indices: tuple[int, ...]
    new_gens: tuple[SemigroupElement, ...]
    s_prime_gens: tuple[SemigroupElement, ...]
    is_trivial: bool
    four_generator_note: Optional[str]
    # endpoint rays between nu and mu+1 that are skipped because their
    # fraction is already a plain power of z or y (hence lies in S)
    skipped_endpoint_indices: tuple[int, ...]


def macaulayfication(
    fan: FanDecomposition,
    problem: ProblemSpec,
    gens: GeneratorReport | None = None,
) -> MacaulayReport:
    """Generators of the semigroup S' whose ring is the Cohen-Macaulay
    closure: the original n+2 generators plus one element per mixed ray.
    """
    if gens is None:
        gens = ideal_generators(fan, problem)
    new = new_semigroup_generators(fan, problem)
    s_prime = tuple(semigroup_generators(problem)) + tuple(new)
    note = None
    if gens.tau == 4:
        note = (
            "the defining ideal has exactly 4 generators; the S2-closure "
            "of the semigroup ring is already its Cohen-Macaulay closure"
        )
    skipped = tuple(
        i for i in range(fan.nu + 1, min(fan.mu, fan.m + 1) + 1)
        if i not in fan.mixed_range
    )
    return MacaulayReport(
        mixed_indices=tuple(fan.mixed_range),
        new_gens=tuple(new),
        s_prime_gens=s_prime,
        is_trivial=not new,
        four_generator_note=note,
        skipped_endpoint_indices=skipped if not is_cm(fan) else (),
    )


def relation_holds(
    lhs: Iterable[SemigroupElement],
    rhs: Iterable[SemigroupElement],
    problem: ProblemSpec,
) -> bool:
    """Whether two formal sums of semigroup elements agree in Z^n (+) H."""
    group = problem.group

    def total(elems):
        coords = [0] * problem.n
        tors = group.identity
        for e in elems:
            if len(e.coords) != problem.n:
                raise ValueError(f"element {e} has wrong arity")
            for j, x in enumerate(e.coords):
                coords[j] += x
            tors = group.add(tors, group.reduce(e.tors))
        return tuple(coords), tors

    return total(lhs) == total(rhs)
