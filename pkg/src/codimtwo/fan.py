"""Negative-regular continued fractions and the ray fan of the
relation lattice.

From the canonical basis ((s_-1, 0), (s_0, p_0)) the expansion
s_{i-1} = q_{i+1}*s_i - s_{i+1} with all q >= 2 produces rays
eps_i = (s_i, p_i) sweeping the first quadrant; consecutive rays always
form a basis of the lattice, with constant determinant p_0*s_-1.
Attached to each ray is the exact quotient vector
v_j = (s_i*b_j - p_i*c_j)/a_j, whose sign pattern drives everything
downstream: nu is the last ray index with v >= 0 componentwise, mu the
first with v <= 0, and the strictly mixed rays in between witness the
failure of the Cohen-Macaulay property.

Ray indices run from -1 to m+1; accessor methods do the shifting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Basis2, IntPair
from .model import ProblemSpec, in_relation_lattice, slope_permutation


def hj_expand(s_minus1: int, s_0: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Negative (ceiling) continued-fraction expansion.

    Returns (q, s) with s = (s_-1, s_0, ..., s_{m+1} = 0) and
    s_{i-1} = q_{i+1}*s_i - s_{i+1}, 0 <= s_{i+1} < s_i, all q >= 2.
    For s_0 = 0 the expansion is empty (m = -1).
    """
    if s_minus1 <= 0 or not 0 <= s_0 < s_minus1:
        raise ValueError(f"need 0 <= s_0 < s_minus1 with s_minus1 > 0, got ({s_minus1}, {s_0})")
    q: list[int] = []
    s = [s_minus1, s_0]
    while s[-1] != 0:
        prev, cur = s[-2], s[-1]
        quot = -(-prev // cur)  # ceil division
        q.append(quot)
        s.append(quot * cur - prev)
    return tuple(q), tuple(s)


@dataclass(frozen=True)
class FanDecomposition:
    """Rays, quotients and quotient-vector table; indices -1..m+1."""

    m: int
    quotients: tuple[int, ...]           # q_1..q_{m+1}
    s_seq: tuple[int, ...]               # s_-1..s_{m+1}
    p_seq: tuple[int, ...]               # p_-1..p_{m+1}
    v_table: tuple[tuple[int, ...], ...]  # per ray, length n each
    nu: int                              # last index with v >= 0 componentwise
    mu: int                              # first index past nu with v <= 0 componentwise
    det: int

    @property
    def indices(self) -> range:
        return range(-1, self.m + 2)

    def s(self, i: int) -> int:
        return self.s_seq[i + 1]

    def p(self, i: int) -> int:
        return self.p_seq[i + 1]

    def ray(self, i: int) -> IntPair:
        return (self.s_seq[i + 1], self.p_seq[i + 1])

    def v(self, i: int) -> tuple[int, ...]:
        return self.v_table[i + 1]

    def q(self, i: int) -> int:
        """Quotient q_i, defined for 1 <= i <= m+1."""
        return self.quotients[i - 1]

    @property
    def mixed_range(self) -> range:
        """Ray indices whose quotient vector has entries of both signs."""
        return range(self.nu + 1, self.mu)


def build_fan(problem: ProblemSpec, basis: Basis2) -> FanDecomposition:
    """Fan of the relation lattice with canonical basis `basis`."""
    q, s_seq = hj_expand(basis.s_minus1, basis.s_0)
    m = len(s_seq) - 3
    p_seq = [0, basis.p_0]
    for k in range(m + 1):
        p_seq.append(q[k] * p_seq[-1] - p_seq[-2])

    v_table = []
    for s, p in zip(s_seq, p_seq):
        row = []
        for aj, bj, cj in zip(problem.a, problem.b, problem.c):
            num = s * bj - p * cj
            if num % aj:
                raise AssertionError(
                    f"ray ({s}, {p}) is not in the relation lattice (broken basis)"
                )
            row.append(num // aj)
        v_table.append(tuple(row))

    nu = -1
    for k, row in enumerate(v_table):
        if all(x >= 0 for x in row):
            nu = k - 1
        else:
            break
    mu = m + 1
    for k in range(len(v_table) - 1, -1, -1):
        if all(x <= 0 for x in v_table[k]):
            mu = k - 1
        else:
            break
    # When every slope coincides, one ray can lie on the common line and
    # its quotient column is identically zero; it then counts both as the
    # last nonnegative and the first nonpositive column.  Keep mu strictly
    # past nu so that "mixed" always means strictly mixed signs.
    mu = max(mu, nu + 1)

    return FanDecomposition(
        m=m,
        quotients=q,
        s_seq=tuple(s_seq),
        p_seq=tuple(p_seq),
        v_table=tuple(v_table),
        nu=nu,
        mu=mu,
        det=basis.det,
    )


@dataclass(frozen=True)
class FanCheck:
    ok: bool
    failures: tuple[str, ...]

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


def fan_invariants(fan: FanDecomposition, problem: ProblemSpec) -> FanCheck:
    """Re-check every structural identity of the fan.

    Covers: constant determinant on consecutive rays, the three-term
    recurrence for s, p and every quotient row, q >= 2, strict
    monotonicity, sign of the end columns, support nesting of the
    positive parts, -1 <= nu < mu <= m+1, and lattice membership of
    every ray (divisibility plus torsion, independent of how the fan
    was built).
    """
    fails: list[str] = []
    idx = list(fan.indices)

    for i in idx[:-1]:
        d = fan.s(i) * fan.p(i + 1) - fan.p(i) * fan.s(i + 1)
        if d != fan.det:
            fails.append(f"det(eps_{i}, eps_{i+1}) = {d} != {fan.det}")

    for name, seq in (("s", fan.s), ("p", fan.p)):
        for i in range(-1, fan.m):
            if seq(i + 2) != fan.q(i + 2) * seq(i + 1) - seq(i):
                fails.append(f"{name}-recurrence fails at index {i + 2}")
    for j in range(problem.n):
        for i in range(-1, fan.m):
            if fan.v(i + 2)[j] != fan.q(i + 2) * fan.v(i + 1)[j] - fan.v(i)[j]:
                fails.append(f"v-recurrence fails in row {j} at index {i + 2}")

    if any(x < 2 for x in fan.quotients):
        fails.append(f"quotient < 2 in {fan.quotients}")
    if any(fan.s(i) <= fan.s(i + 1) for i in idx[:-1]):
        fails.append("s sequence not strictly decreasing")
    if fan.s(fan.m + 1) != 0:
        fails.append("s sequence does not end at 0")
    if any(fan.p(i) >= fan.p(i + 1) for i in idx[:-1]):
        fails.append("p sequence not strictly increasing")
    if fan.p(-1) != 0:
        fails.append("p sequence does not start at 0")

    for j in range(problem.n):
        if any(fan.v(i)[j] <= fan.v(i + 1)[j] for i in idx[:-1]):
            fails.append(f"quotient row {j} not strictly decreasing")
    if any(x < 0 for x in fan.v(-1)):
        fails.append("leading quotient column has a negative entry")
    if any(x > 0 for x in fan.v(fan.m + 1)):
        fails.append("trailing quotient column has a positive entry")

    for i in idx[:-1]:
        sup_next = {j for j, x in enumerate(fan.v(i + 1)) if x > 0}
        sup_cur = {j for j, x in enumerate(fan.v(i)) if x > 0}
        if not sup_next <= sup_cur:
            fails.append(f"positive support not nested between indices {i} and {i + 1}")

    if not -1 <= fan.nu < fan.mu <= fan.m + 1:
        fails.append(f"index bounds violated: nu={fan.nu}, mu={fan.mu}, m={fan.m}")
    for i in fan.mixed_range:
        row = fan.v(i)
        if not (any(x > 0 for x in row) and any(x < 0 for x in row)):
            fails.append(f"index {i} between nu and mu is not mixed")

    perm = slope_permutation(problem)
    for i in idx:
        if not in_relation_lattice(fan.ray(i), problem):
            fails.append(f"ray eps_{i} = {fan.ray(i)} fails lattice membership")
        row = [fan.v(i)[j] for j in perm]
        seen_nonneg = False
        for x in row:
            if x >= 0:
                seen_nonneg = True
            elif seen_nonneg:
                fails.append(f"slope-ordered quotient row at index {i} is not sign-split")
                break

    return FanCheck(ok=not fails, failures=tuple(fails))
