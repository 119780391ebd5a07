"""End-to-end analysis and report serialization.

`analyze` runs the full pipeline: canonical basis of the relation
lattice, fan decomposition, defining generators with the
Cohen-Macaulay verdict, Macaulayfication, and (on request) the
verification oracle.  Reports render as human-readable text or as a
structured JSON document in which every integer is a decimal string,
so consumers never overflow; `parse_report` inverts the structured
form exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .binomials import (
    Binomial,
    Form,
    GeneratorReport,
    Monomial,
    TieBreak,
    ideal_generators,
)
from .fan import FanDecomposition, build_fan
from .lattice import Basis2, FiniteAbelianGroup
from .macaulay import MacaulayReport, macaulayfication
from .model import (
    ProblemSpec,
    SemigroupElement,
    TorsionData,
    relation_lattice,
    validate,
)
from .verify import VerificationReport, run_verification

FORMAT_TAG = "height-two-lattice-analysis/1"

CONVENTIONS = {
    "roles": (
        "z carries the exponent vector b and pairs with the s-coordinate; "
        "y carries c and pairs with p"
    ),
    "mu": (
        "mu is the first ray index past nu whose quotient column is "
        "componentwise <= 0; mu_alt = mu - 1 is the last index whose "
        "column still carries a positive entry"
    ),
}


@dataclass(frozen=True)
class AnalysisOptions:
    verify: bool = False
    bound: int = 12
    tie_breaks: tuple[TieBreak, ...] = (TieBreak.REVLEX_Z_SMALLEST, TieBreak.LEX_Z_LARGEST)
    pair_cap: int = 10_000


@dataclass(frozen=True)
class AnalysisReport:
    problem: ProblemSpec
    basis: Basis2
    fan: FanDecomposition
    generators: GeneratorReport
    macaulay: MacaulayReport
    verification: Optional[VerificationReport]

    @property
    def is_cm(self) -> bool:
        return self.generators.is_cm

    @property
    def tau(self) -> int:
        return self.generators.tau


def analyze(problem: ProblemSpec, options: AnalysisOptions = AnalysisOptions()) -> AnalysisReport:
    """Run the pipeline on a validated problem."""
    validate(problem)
    basis = relation_lattice(problem)
    fan = build_fan(problem, basis)
    gens = ideal_generators(fan, problem)
    mac = macaulayfication(fan, problem, gens)
    verification = None
    if options.verify:
        verification = run_verification(
            problem, gens.generators, options.bound, options.tie_breaks, options.pair_cap
        )
    return AnalysisReport(problem, basis, fan, gens, mac, verification)


# ---------------------------------------------------------------------------
# structured (JSON) form: integers as decimal strings throughout

def _ints(seq) -> list[str]:
    return [str(int(x)) for x in seq]


def _mono_to_json(m: Monomial) -> dict:
    return {"z": str(m.e_z), "y": str(m.e_y), "x": _ints(m.e_x)}


def _mono_from_json(d: dict) -> Monomial:
    return Monomial(int(d["z"]), int(d["y"]), tuple(int(x) for x in d["x"]))


def _elem_to_json(e: SemigroupElement) -> dict:
    return {"coords": _ints(e.coords), "torsion": _ints(e.tors)}


def _elem_from_json(d: dict) -> SemigroupElement:
    return SemigroupElement(tuple(int(x) for x in d["coords"]),
                            tuple(int(x) for x in d["torsion"]))


def report_to_dict(report: AnalysisReport) -> dict:
    p = report.problem
    torsion = None
    if p.torsion is not None:
        torsion = {
            "moduli": _ints(p.torsion.group.moduli),
            "h_x": [_ints(h) for h in p.torsion.h_x],
            "h_z": _ints(p.torsion.h_z),
            "h_y": _ints(p.torsion.h_y),
        }
    fan = report.fan
    gens = report.generators
    mac = report.macaulay
    doc = {
        "format": FORMAT_TAG,
        "conventions": CONVENTIONS,
        "problem": {"n": str(p.n), "a": _ints(p.a), "b": _ints(p.b), "c": _ints(p.c),
                    "torsion": torsion},
        "basis": {"e_minus1": _ints(report.basis.e_minus1), "e_0": _ints(report.basis.e_0)},
        "fan": {
            "m": str(fan.m),
            "quotients": _ints(fan.quotients),
            "s": _ints(fan.s_seq),
            "p": _ints(fan.p_seq),
            "v_rays": [_ints(row) for row in fan.v_table],
            "nu": str(fan.nu),
            "mu": str(fan.mu),
            "mu_alt": str(fan.mu - 1),
            "det": str(fan.det),
        },
        "is_cm": gens.is_cm,
        "tau": str(gens.tau),
        "generators": [
            {
                "text": b.render(),
                "pair": _ints(v),
                "form": b.form.value,
                "lhs": _mono_to_json(b.lhs),
                "rhs": _mono_to_json(b.rhs),
            }
            for b, v in zip(gens.generators, gens.lattice_vectors)
        ],
        "macaulayfication": {
            "mixed_indices": _ints(mac.mixed_indices),
            "new_generators": [_elem_to_json(e) for e in mac.new_gens],
            "s_prime_generators": [_elem_to_json(e) for e in mac.s_prime_gens],
            "trivial": mac.is_trivial,
            "skipped_endpoint_indices": _ints(mac.skipped_endpoint_indices),
            "four_generator_note": mac.four_generator_note,
        },
    }
    if report.verification is not None:
        v = report.verification
        doc["verification"] = {
            "all_generators_in_lattice": v.all_generators_in_lattice,
            "gb_certified": [{"order": name, "certified": ok} for name, ok in v.gb_certified],
            "ideal_equality_bound": str(v.ideal_equality_bound),
            "ideal_equality_ok": v.ideal_equality_ok,
            "forbidden_form_ok": v.forbidden_form_ok,
            "redundancy": [{"generator": g, "redundant": r} for g, r in v.redundancy],
            "passed": v.passed,
        }
    return doc


def render_structured(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


def parse_report(text: str) -> AnalysisReport:
    """Rebuild an AnalysisReport from its structured rendering."""
    doc = json.loads(text)
    if doc.get("format") != FORMAT_TAG:
        raise ValueError(f"unknown report format {doc.get('format')!r}")
    pd = doc["problem"]
    torsion = None
    if pd["torsion"] is not None:
        td = pd["torsion"]
        torsion = TorsionData(
            group=FiniteAbelianGroup(tuple(int(x) for x in td["moduli"])),
            h_x=tuple(tuple(int(x) for x in h) for h in td["h_x"]),
            h_z=tuple(int(x) for x in td["h_z"]),
            h_y=tuple(int(x) for x in td["h_y"]),
        )
    problem = ProblemSpec(
        a=tuple(int(x) for x in pd["a"]),
        b=tuple(int(x) for x in pd["b"]),
        c=tuple(int(x) for x in pd["c"]),
        torsion=torsion,
    )
    bd = doc["basis"]
    basis = Basis2(tuple(int(x) for x in bd["e_minus1"]), tuple(int(x) for x in bd["e_0"]))
    fd = doc["fan"]
    fan = FanDecomposition(
        m=int(fd["m"]),
        quotients=tuple(int(x) for x in fd["quotients"]),
        s_seq=tuple(int(x) for x in fd["s"]),
        p_seq=tuple(int(x) for x in fd["p"]),
        v_table=tuple(tuple(int(x) for x in row) for row in fd["v_rays"]),
        nu=int(fd["nu"]),
        mu=int(fd["mu"]),
        det=int(fd["det"]),
    )
    gens = GeneratorReport(
        is_cm=doc["is_cm"],
        tau=int(doc["tau"]),
        generators=tuple(
            Binomial(_mono_from_json(g["lhs"]), _mono_from_json(g["rhs"]), Form(g["form"]))
            for g in doc["generators"]
        ),
        lattice_vectors=tuple(
            (int(g["pair"][0]), int(g["pair"][1])) for g in doc["generators"]
        ),
        nu=int(fd["nu"]),
        mu=int(fd["mu"]),
    )
    md = doc["macaulayfication"]
    mac = MacaulayReport(
        mixed_indices=tuple(int(x) for x in md["mixed_indices"]),
        new_gens=tuple(_elem_from_json(e) for e in md["new_generators"]),
        s_prime_gens=tuple(_elem_from_json(e) for e in md["s_prime_generators"]),
        is_trivial=md["trivial"],
        four_generator_note=md["four_generator_note"],
        skipped_endpoint_indices=tuple(int(x) for x in md["skipped_endpoint_indices"]),
    )
    verification = None
    if "verification" in doc:
        vd = doc["verification"]
        verification = VerificationReport(
            all_generators_in_lattice=vd["all_generators_in_lattice"],
            gb_certified=tuple((g["order"], g["certified"]) for g in vd["gb_certified"]),
            ideal_equality_bound=int(vd["ideal_equality_bound"]),
            ideal_equality_ok=vd["ideal_equality_ok"],
            forbidden_form_ok=vd["forbidden_form_ok"],
            redundancy=tuple((r["generator"], r["redundant"]) for r in vd["redundancy"]),
        )
    return AnalysisReport(problem, basis, fan, gens, mac, verification)


# ---------------------------------------------------------------------------
# text form

def render_text(report: AnalysisReport) -> str:
    p = report.problem
    fan = report.fan
    lines = []
    tors = "none"
    if p.torsion is not None:
        tors = f"moduli={list(p.torsion.group.moduli)}"
    lines.append(f"problem: n={p.n} a={list(p.a)} b={list(p.b)} c={list(p.c)} torsion={tors}")
    lines.append(
        f"lattice basis: {report.basis.e_minus1}, {report.basis.e_0}"
        f"   (index {report.basis.det})"
    )
    lines.append(
        f"fan: m={fan.m} quotients={list(fan.quotients)} s={list(fan.s_seq)} "
        f"p={list(fan.p_seq)} nu={fan.nu} mu={fan.mu} (mu_alt={fan.mu - 1})"
    )
    for j in range(p.n):
        row = [fan.v_table[k][j] for k in range(len(fan.v_table))]
        lines.append(f"  quotient row x{j + 1}: {row}")
    lines.append(f"cohen_macaulay: {str(report.is_cm).lower()}")
    lines.append(f"generators (tau={report.tau}):")
    for b in report.generators.generators:
        lines.append(f"  {b.render()}")
    mac = report.macaulay
    if mac.is_trivial:
        lines.append("macaulayfication: trivial (semigroup already Cohen-Macaulay)")
    else:
        lines.append(f"macaulayfication: {len(mac.new_gens)} new semigroup generator(s)")
        for e in mac.new_gens:
            t = f" torsion={list(e.tors)}" if e.tors else ""
            lines.append(f"  new: {list(e.coords)}{t}")
        lines.append("  enlarged semigroup generators:")
        for e in mac.s_prime_gens:
            t = f" torsion={list(e.tors)}" if e.tors else ""
            lines.append(f"    {list(e.coords)}{t}")
    if mac.four_generator_note:
        lines.append(f"note: {mac.four_generator_note}")
    if report.verification is not None:
        v = report.verification
        lines.append("verification:")
        lines.append(f"  generators in lattice: {v.all_generators_in_lattice}")
        for name, ok in v.gb_certified:
            lines.append(f"  groebner[{name}]: {ok}")
        lines.append(f"  ideal equality up to bound {v.ideal_equality_bound}: {v.ideal_equality_ok}")
        lines.append(f"  forbidden-form scan: {v.forbidden_form_ok}")
        for g, r in v.redundancy:
            lines.append(f"  redundant[{g}]: {r}")
        lines.append(f"  passed: {v.passed}")
    return "\n".join(lines) + "\n"
