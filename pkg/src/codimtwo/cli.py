"""Batch front-end.

Reads a problem document (JSON with keys a, b, c and optional torsion),
runs the pipeline and prints a text or structured report.

Exit codes: 0 success, 2 invalid input, 3 verification ran and failed,
4 oracle resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .binomials import TieBreak
from .lattice import FiniteAbelianGroup
from .model import InvalidProblemError, ProblemSpec, TorsionData, validate
from .report import (
    AnalysisOptions,
    analyze,
    render_structured,
    render_text,
    report_to_dict,
)
from .verify import CompletionCapError

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFICATION_FAILED = 3
EXIT_RESOURCE_CAP = 4

_COMMANDS = ("analyze", "generators", "macaulayfy", "verify")


class InputError(ValueError):
    pass


def _expect_int_list(doc: dict, key: str) -> tuple[int, ...]:
    val = doc.get(key)
    if not isinstance(val, list) or not val:
        raise InputError(f"key '{key}' must be a nonempty list of integers")
    for x in val:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"key '{key}' contains a non-integer entry {x!r}")
    return tuple(val)


def parse_problem(text: str) -> ProblemSpec:
    """Parse and validate a problem document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    unknown = set(doc) - {"a", "b", "c", "torsion"}
    if unknown:
        raise InputError(f"unknown key(s): {', '.join(sorted(unknown))}")
    for key in ("a", "b", "c"):
        if key not in doc:
            raise InputError(f"missing key '{key}'")
    a = _expect_int_list(doc, "a")
    b = _expect_int_list(doc, "b")
    c = _expect_int_list(doc, "c")
    torsion = None
    if "torsion" in doc and doc["torsion"] is not None:
        td = doc["torsion"]
        if not isinstance(td, dict):
            raise InputError("key 'torsion' must be an object")
        unknown = set(td) - {"moduli", "h_x", "h_z", "h_y"}
        if unknown:
            raise InputError(f"unknown torsion key(s): {', '.join(sorted(unknown))}")
        for key in ("moduli", "h_x", "h_z", "h_y"):
            if key not in td:
                raise InputError(f"missing torsion key '{key}'")
        moduli = _expect_int_list(td, "moduli")
        group = FiniteAbelianGroup(moduli)
        if not isinstance(td["h_x"], list) or len(td["h_x"]) != len(a):
            raise InputError(f"torsion key 'h_x' must be a list of {len(a)} group elements")
        try:
            h_x = tuple(group.reduce(h) for h in td["h_x"])
            h_z = group.reduce(_expect_int_list(td, "h_z"))
            h_y = group.reduce(_expect_int_list(td, "h_y"))
        except (ValueError, TypeError) as exc:
            raise InputError(f"bad torsion element: {exc}")
        torsion = TorsionData(group=group, h_x=h_x, h_z=h_z, h_y=h_y)
    problem = ProblemSpec(a=a, b=b, c=c, torsion=torsion)
    validate(problem)
    return problem


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codimtwo",
        description="Analyze a height-two simplicial lattice ideal: fan "
                    "decomposition, defining binomials, Cohen-Macaulay verdict "
                    "and Macaulayfication.",
    )
    parser.add_argument("command", nargs="?", default="analyze", choices=_COMMANDS,
                        help="what to print (default: analyze = full report)")
    parser.add_argument("input", nargs="?", default="-",
                        help="path of the problem document, or '-' for stdin")
    parser.add_argument("--verify", action="store_true",
                        help="run the verification oracle and include its report")
    parser.add_argument("--max-degree", type=int, default=12, metavar="D",
                        help="coordinate bound for bounded ideal-equality checks")
    parser.add_argument("--order", action="append", metavar="NAME",
                        choices=[t.value for t in TieBreak],
                        help="term-order tie break to certify (repeatable)")
    parser.add_argument("--json", "--json-style", dest="json_style", action="store_true",
                        help="emit the structured report (all integers as decimal strings)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    # the subcommand is optional: a leading path argument means 'analyze'
    if args and args[0] not in _COMMANDS and not args[0].startswith("-"):
        args = ["analyze"] + args
    ns = _build_parser().parse_args(args)

    try:
        if ns.input == "-":
            text = sys.stdin.read()
        else:
            with open(ns.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    try:
        problem = parse_problem(text)
    except (InputError, InvalidProblemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    tie_breaks = tuple(TieBreak(v) for v in ns.order) if ns.order else (
        TieBreak.REVLEX_Z_SMALLEST, TieBreak.LEX_Z_LARGEST)
    want_verify = ns.verify or ns.command == "verify"
    options = AnalysisOptions(verify=want_verify, bound=ns.max_degree, tie_breaks=tie_breaks)

    try:
        report = analyze(problem, options)
    except CompletionCapError as exc:
        print(f"error: oracle resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    doc = report_to_dict(report)
    if ns.command == "analyze":
        out = render_structured(report) if ns.json_style else render_text(report)
    elif ns.command == "generators":
        if ns.json_style:
            sub = {k: doc[k] for k in ("format", "is_cm", "tau", "generators")}
            out = json.dumps(sub, sort_keys=True, indent=2) + "\n"
        else:
            out = "".join(b.render() + "\n" for b in report.generators.generators)
    elif ns.command == "macaulayfy":
        if ns.json_style:
            sub = {k: doc[k] for k in ("format", "is_cm", "macaulayfication")}
            out = json.dumps(sub, sort_keys=True, indent=2) + "\n"
        else:
            mac = report.macaulay
            lines = [f"trivial: {str(mac.is_trivial).lower()}"]
            for e in mac.new_gens:
                t = f" torsion={list(e.tors)}" if e.tors else ""
                lines.append(f"new: {list(e.coords)}{t}")
            for e in mac.s_prime_gens:
                t = f" torsion={list(e.tors)}" if e.tors else ""
                lines.append(f"generator: {list(e.coords)}{t}")
            out = "\n".join(lines) + "\n"
    else:  # verify
        if ns.json_style:
            sub = {k: doc[k] for k in ("format", "verification")}
            out = json.dumps(sub, sort_keys=True, indent=2) + "\n"
        else:
            v = report.verification
            lines = [
                f"generators in lattice: {v.all_generators_in_lattice}",
                *(f"groebner[{name}]: {ok}" for name, ok in v.gb_certified),
                f"ideal equality up to bound {v.ideal_equality_bound}: {v.ideal_equality_ok}",
                f"forbidden-form scan: {v.forbidden_form_ok}",
                *(f"redundant[{g}]: {r}" for g, r in v.redundancy),
                f"passed: {v.passed}",
            ]
            out = "\n".join(lines) + "\n"

    sys.stdout.write(out)
    if want_verify and report.verification is not None and not report.verification.passed:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
