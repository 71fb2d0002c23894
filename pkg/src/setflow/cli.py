"""Command-line interface.

Exit codes: 0 all checks passed, 1 invariant/property failure, 2 usage or
input error. Output goes to files or stdio only; the single environment
variable honored is NO_COLOR.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .constructions import central_families, lift_swap, near_central
from .decomposition import NotEmptyMinimalError, build_decomposition, chvatal_check
from .enumeration import canonicalize, enumerate_downsets, enumerate_maximal_intersecting
from .families import Family, elements_of, family_dual, mask_from_elements
from .flows import pathsum_bruteforce, pathsum_formula
from .serialization import (
    FamilyFormatError,
    axisflow_to_json,
    decomposition_to_json,
    family_to_json,
    parse_family,
)
from .suites import SUITES
from .survey import run_survey, write_csv, write_jsonl

EPILOG = """\
formats:
  families     {"n": N, "sets": [[1,2], ...]} (1-indexed, strictly increasing)
               or {"n": N, "masks": [3, ...]} (element i = bit i-1)
  survey jsonl one record per family, then {"summary": {...}}
  survey csv   columns: n, family, canonical, size, intersecting, self_dual,
               subset_closed, superset_closed, maximal_intersecting, central,
               empty_minimal, witness_axis, witness_set, c_numerators

exit codes: 0 pass, 1 invariant failure, 2 usage error
"""


class UsageError(Exception):
    pass


def _read_family(path: str) -> Family:
    if path == "-":
        return parse_family(sys.stdin.read())
    try:
        with open(path, "rb") as fh:
            return parse_family(fh.read())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _colored(text: str, good: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    code = "32" if good else "31"
    return f"\x1b[{code}m{text}\x1b[0m"


def cmd_survey(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    records, summary = run_survey(args.n, canonical=args.canonical, jobs=args.jobs)
    out, close = _open_out(args.output)
    try:
        if args.format == "csv":
            write_csv(records, out)
        else:
            write_jsonl(records, summary, out)
    finally:
        if close:
            out.close()
    if args.plot:
        from .plotting import render_survey_figure

        render_survey_figure(records, summary, args.plot)
    elapsed = time.perf_counter() - start
    print(
        f"surveyed {summary['total']} families on [{args.n}]: "
        f"{summary['empty_minimal']} empty-minimal, {summary['central']} central "
        f"({elapsed:.2f}s)",
        file=sys.stderr,
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suite_fn, valid_range = SUITES[args.suite]
    if args.n not in valid_range:
        raise UsageError(
            f"suite '{args.suite}' runs for {valid_range.start} <= n <= {valid_range.stop - 1}"
        )
    start = time.perf_counter()
    result = suite_fn(args.n)
    elapsed = time.perf_counter() - start
    status = _colored("PASS", True) if result.passed else _colored("FAIL", False)
    print(f"{status} suite={result.suite} n={result.n} checked={result.checked} ({elapsed:.2f}s)")
    if not result.passed:
        print(f"first counterexample: {result.detail}")
        return 1
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    F = _read_family(args.input)
    try:
        D = build_decomposition(F)
    except NotEmptyMinimalError as e:
        a, A = e.witness
        base = "{" + ",".join(map(str, elements_of(A))) + "}"
        print(f"not empty-minimal: witness edge axis={a} base_set={base}", file=sys.stderr)
        return 1
    out, close = _open_out(args.output)
    try:
        out.write(decomposition_to_json(D))
        out.write("\n")
    finally:
        if close:
            out.close()
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    out, close = _open_out(args.output)
    try:
        if args.kind == "central":
            if args.n is None:
                raise UsageError("--kind central requires -n")
            for F in central_families(args.n):
                out.write(family_to_json(F))
                out.write("\n")
        elif args.kind == "near_central":
            if not args.family or not args.middle:
                raise UsageError("--kind near_central requires --family and --middle")
            F = _read_family(args.family)
            G = _read_family(args.middle)
            out.write(family_to_json(near_central(F, G)))
            out.write("\n")
        else:  # lift_swap
            if not args.family or args.set is None:
                raise UsageError("--kind lift_swap requires --family and --set")
            F = _read_family(args.family)
            try:
                elements = [int(tok) for tok in args.set.split(",") if tok.strip()]
            except ValueError as e:
                raise UsageError(f"--set must be comma-separated elements: {e}") from e
            out.write(family_to_json(lift_swap(F, mask_from_elements(elements, F.n))))
            out.write("\n")
    finally:
        if close:
            out.close()
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    F = _read_family(args.family)
    G = _read_family(args.downset)
    report = chvatal_check(F, G)
    obj = {
        "dot": report.dot,
        "identity_ok": report.identity_ok,
        "star_dots": list(report.star_dots),
        "bound_ok": report.bound_ok,
    }
    print(json.dumps(obj, separators=(",", ":")))
    return 0 if report.identity_ok and report.bound_ok else 1


def cmd_flow(args: argparse.Namespace) -> int:
    F = _read_family(args.input)
    if args.dual:
        F = family_dual(F)
    L = pathsum_bruteforce(F) if args.method == "brute" else pathsum_formula(F)
    out, close = _open_out(args.output)
    try:
        out.write(axisflow_to_json(L))
        out.write("\n")
    finally:
        if close:
            out.close()
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    fams = enumerate_downsets(args.n) if args.kind == "downsets" else enumerate_maximal_intersecting(args.n)
    if args.canonical:
        reps = sorted({canonicalize(F).members for F in fams})
        fams = [Family(args.n, m) for m in reps]
    out, close = _open_out(args.output)
    try:
        for F in fams:
            out.write(family_to_json(F))
            out.write("\n")
    finally:
        if close:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setflow",
        description="Exact surveys of maximal intersecting families and their edge flows.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("survey", help="classify every maximal intersecting family on [n]")
    p.add_argument("-n", type=int, required=True, help="ground set size (1..6)")
    p.add_argument("--canonical", action="store_true", help="one record per isomorphism class")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output is order-stable)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output", default=None, help="report file (default stdout)")
    p.add_argument("--plot", default=None, metavar="FILE", help="also render a summary figure")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="run one exhaustive invariant suite")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="star-coefficient decomposition of a family")
    p.add_argument("-i", "--input", required=True, help="family JSON file ('-' for stdin)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", help="build central / near-central / lift-swap families")
    p.add_argument("--kind", choices=("central", "near_central", "lift_swap"), required=True)
    p.add_argument("-n", type=int, default=None, help="ground set size (central)")
    p.add_argument("--family", default=None, help="base family JSON file")
    p.add_argument("--middle", default=None, help="middle-layer family JSON file (near_central)")
    p.add_argument("--set", default=None, help="comma-separated elements of the swap set (lift_swap)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="dot-product identity and star bound for a family/downset pair")
    p.add_argument("--family", required=True)
    p.add_argument("--downset", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("flow", help="emit the path-sum edge flow of a family")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--dual", action="store_true", help="flow of the setwise complement")
    p.add_argument("--method", choices=("formula", "brute"), default="formula")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("enumerate", help="stream families as JSON lines")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--kind", choices=("maximal", "downsets"), default="maximal")
    p.add_argument("--canonical", action="store_true", help="deduplicate up to isomorphism")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FamilyFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
