"""Exact analysis of height-two simplicial lattice ideals.

Given exponent data (a, b, c) with optional torsion, the package
computes the rank-2 relation lattice, its continued-fraction fan, the
defining binomial generators, the Cohen-Macaulay verdict, and the
Macaulayfication of the semigroup ring, with an independent oracle
certifying every emitted object.
"""

from .lattice import (
    Basis2,
    FiniteAbelianGroup,
    TRIVIAL_GROUP,
    ext_gcd,
    kernel_of_pair_map,
    normalize_basis,
)
from .model import (
    InvalidProblemError,
    ProblemSpec,
    SemigroupElement,
    TorsionData,
    WeightVector,
    in_relation_lattice,
    relation_lattice,
    semigroup_generators,
    semigroup_member,
    slope_permutation,
    validate,
    weights,
)
from .fan import FanCheck, FanDecomposition, build_fan, fan_invariants, hj_expand
from .binomials import (
    Binomial,
    Form,
    GeneratorReport,
    Monomial,
    TermOrder,
    TieBreak,
    binomial_of_pair,
    classify_binomial,
    ideal_generators,
    is_cm,
    leading_monomial,
)
from .macaulay import (
    MacaulayReport,
    macaulayfication,
    mixed_indices,
    new_semigroup_generators,
    relation_holds,
)
from .verify import (
    CompletionCapError,
    VerificationReport,
    binomial_in_lattice,
    buchberger_complete,
    ideal_equality_bounded,
    in_lattice,
    is_groebner,
    no_forbidden_binomials,
    redundancy_probe,
    run_verification,
    spair_and_reduce,
)
from .report import (
    AnalysisOptions,
    AnalysisReport,
    analyze,
    parse_report,
    render_structured,
    render_text,
)
from .cli import parse_problem

__version__ = "0.1.0"

__all__ = [
    "AnalysisOptions",
    "AnalysisReport",
    "Basis2",
    "Binomial",
    "CompletionCapError",
    "FanCheck",
    "FanDecomposition",
    "FiniteAbelianGroup",
    "Form",
    "GeneratorReport",
    "InvalidProblemError",
    "MacaulayReport",
    "Monomial",
    "ProblemSpec",
    "SemigroupElement",
    "TermOrder",
    "TieBreak",
    "TorsionData",
    "TRIVIAL_GROUP",
    "VerificationReport",
    "WeightVector",
    "analyze",
    "binomial_in_lattice",
    "binomial_of_pair",
    "buchberger_complete",
    "build_fan",
    "classify_binomial",
    "ext_gcd",
    "fan_invariants",
    "hj_expand",
    "ideal_equality_bounded",
    "ideal_generators",
    "in_lattice",
    "in_relation_lattice",
    "is_cm",
    "is_groebner",
    "kernel_of_pair_map",
    "leading_monomial",
    "macaulayfication",
    "mixed_indices",
    "new_semigroup_generators",
    "no_forbidden_binomials",
    "normalize_basis",
    "parse_problem",
    "parse_report",
    "redundancy_probe",
    "relation_holds",
    "relation_lattice",
    "render_structured",
    "render_text",
    "run_verification",
    "semigroup_generators",
    "semigroup_member",
    "slope_permutation",
    "spair_and_reduce",
    "validate",
    "weights",
]
