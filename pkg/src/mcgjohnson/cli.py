"""Command-line front end: verification suites, invariants of a single map, rank tables.

Exit codes: 0 when everything passes, 1 when a check fails or an input map
violates an invariant, 2 for usage errors, unreadable input or exceeded budgets.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import braid as br
from . import exterior as ext
from . import mcg
from .lie import htensor_in_Fmr
from .magnus import ResourceBudgetError
from .suites import MAX_CUTOFF, MAX_DEGREE, MAX_RANKS_GENUS, SUITES, BudgetError, SuiteParams, rank_rows, run_suite
from .words import WordError

log = logging.getLogger("mcgjohnson")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(ValueError):
    """The input file could not be read or does not match a known schema."""


# -- invariants ------------------------------------------------------------------

def _lagrangian_depth(w: ext.WedgeVector, genus: int) -> int:
    """Largest m with w in K_m (4 for the zero vector)."""
    if w.is_zero():
        return 4
    return min(ext.x_letters(t, genus) for t in w.coords)


def _filtration_depth(t, genus: int) -> int | str:
    """Largest r with t in F_{n+1}^r, or "all" for the zero tensor."""
    if t.is_zero():
        return "all"
    r = 0
    while r <= t.degree + 1 and htensor_in_Fmr(t, genus, r + 1):
        r += 1
    return r


def endo_invariants(f: mcg.FreeEndo, cutoff: int) -> dict:
    """Everything computable about one endomorphism, up to the given word cutoff."""
    g = f.genus
    S = mcg.symplectic_matrix(f)
    report: dict = {
        "input": f.to_json(),
        "symplectic_matrix": [list(r) for r in S.rows()],
        "torelli": mcg.is_torelli(f),
        "fixes_L": mcg.is_in_Lbar(f),
    }
    depth = mcg.weight_degree(f, cutoff)
    report["weight_degree"] = depth.to_json()
    report["weight_degree_text"] = f"{depth} (up to cutoff {cutoff})"
    if report["fixes_L"]:
        first, second = mcg.cal_J(f)
        report["extended_J"] = {"wedge": first.format(g), "H/L": {f"ybar{i + 1}": c for i, c in second.items()},
                                "zero": mcg.cal_J_is_zero((first, second))}
    if report["torelli"]:
        tau = mcg.johnson_tau(f)
        report["tau"] = {"value": tau.format(g), "vector": tau.vector(), "in_K": tau.vector() in ext.kernel_K(g),
                         "K_m_depth": _lagrangian_depth(tau, g)}
        values = {}
        top = min(depth.value, cutoff - 1)
        for n in range(1, top + 1):
            J = mcg.johnson_morita(f, n)
            values[str(n)] = {"value": J.format(g), "F_depth": _filtration_depth(J, g)}
        report["J_n"] = values
    return report


def braid_invariants(a: br.PureBraid, cutoff: int) -> dict:
    g = a.strands
    depth = br.braid_weight_degree(a, cutoff)
    report: dict = {
        "input": a.to_json(),
        "linking_matrix": a.linking_matrix(),
        "weight_degree": depth.to_json(),
        "weight_degree_text": f"{depth} (up to cutoff {cutoff})",
    }
    if depth.at_least(2) and g >= 1:
        report["J_b"] = br.J_b(a).format(g)
    report["psi"] = endo_invariants(br.psi(a), cutoff)
    report["kappa"] = endo_invariants(br.kappa(a), cutoff)
    return report


def load_record(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    try:
        if "strands" in data:
            return br.PureBraid.from_json(data)
        if "genus" in data:
            return mcg.FreeEndo.from_json(data)
    except (mcg.EndoError, br.BraidError, WordError) as exc:
        raise InputError(str(exc)) from exc
    raise InputError("input has neither a 'genus' (endomorphism) nor a 'strands' (braid) field")


def _print_tree(d, indent: int = 0, out=None) -> None:
    out = out or sys.stdout
    pad = "  " * indent
    for k, v in d.items():
        if isinstance(v, dict):
            print(f"{pad}{k}:", file=out)
            _print_tree(v, indent + 1, out)
        else:
            print(f"{pad}{k}: {v}", file=out)


# -- commands ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    params = SuiteParams(args.genus, args.max_degree, args.cutoff, args.seed, args.samples)
    report = run_suite(args.suite, params)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, default=str))
    else:
        print(report.format_table())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_invariants(args) -> int:
    if not 2 <= args.cutoff <= MAX_CUTOFF:
        raise BudgetError(f"cutoff must lie in 2..{MAX_CUTOFF}")
    obj = load_record(args.input)
    try:
        if isinstance(obj, br.PureBraid):
            report = braid_invariants(obj, args.cutoff)
        else:
            report = endo_invariants(obj, args.cutoff)
    except (mcg.JohnsonError, br.BraidError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        print(json.dumps(report, indent=2, default=str))
    else:
        _print_tree(report)
    return EXIT_OK


def cmd_ranks(args) -> int:
    if not 1 <= args.genus <= MAX_RANKS_GENUS:
        raise BudgetError(f"genus must lie in 1..{MAX_RANKS_GENUS}")
    if not 2 <= args.max_degree <= MAX_DEGREE:
        raise BudgetError(f"max degree must lie in 2..{MAX_DEGREE}")
    rows = rank_rows(range(args.min_genus, args.genus + 1), range(1, args.max_degree))
    if args.json:
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    cols = ["g", "n", "witt", "r", "r_framed", "rank_ker_b", "difference", "rank_K", "rank_K_m"]
    print("  ".join(f"{c:>10}" for c in cols))
    for row in rows:
        print("  ".join(f"{str(row.get(c, '')):>10}" for c in cols))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcgjohnson", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    v.add_argument("--genus", type=int, default=3)
    v.add_argument("--max-degree", type=int, default=MAX_DEGREE)
    v.add_argument("--cutoff", type=int, default=MAX_CUTOFF)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=4)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("invariants", help="invariants of an endomorphism or braid given as JSON")
    i.add_argument("input", help="JSON file, or - for standard input")
    i.add_argument("--cutoff", type=int, default=4)
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_invariants)

    r = sub.add_parser("ranks", help="table of Witt numbers, braid ranks and kernel ranks")
    r.add_argument("--genus", type=int, default=4, help="largest genus")
    r.add_argument("--min-genus", type=int, default=2)
    r.add_argument("--max-degree", type=int, default=5, help="ker b is taken on degrees below this")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_ranks)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (BudgetError, ResourceBudgetError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
