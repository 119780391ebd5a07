"""Shared fixture problems used across the test modules."""

from codimtwo.lattice import FiniteAbelianGroup
from codimtwo.model import ProblemSpec, TorsionData

K3 = ProblemSpec(a=(6, 6, 6), b=(1, 4, 1), c=(4, 1, 1))
TWISTED = ProblemSpec(a=(3, 3), b=(1, 2), c=(2, 1))
QUARTIC = ProblemSpec(a=(4, 4), b=(1, 3), c=(3, 1))
CURVE345 = ProblemSpec(a=(3,), b=(4,), c=(5,))
TORSION = ProblemSpec(
    a=(2, 2), b=(1, 1), c=(1, 1),
    torsion=TorsionData(group=FiniteAbelianGroup((2,)),
                        h_x=((1,), (1,)), h_z=(1,), h_y=(0,)),
)
# non-CM instance whose emitted set has exactly four binomials
FOUR_GEN = ProblemSpec(a=(2, 2), b=(1, 3), c=(3, 1))


def example7(k: int) -> ProblemSpec:
    """The one-parameter family x_i = u_i^{2k}, z = u_1 u_2^{k+1} u_3..u_k,
    y = u_1^{k+1} u_2 u_3..u_k, for k >= 3."""
    assert k >= 3
    return ProblemSpec(
        a=(2 * k,) * k,
        b=tuple([1, k + 1] + [1] * (k - 2)),
        c=tuple([k + 1, 1] + [1] * (k - 2)),
    )
