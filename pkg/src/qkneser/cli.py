"""Command-line front end.

Subcommands:

  gauss N I [--q Q] [--format F]       Gaussian binomial, symbolic or at q=Q
  eigenvalues V K [--q Q] [--form ...] q-Kneser spectrum table
  verify identities [--max N]          sweep all six identity grids
  verify spectrum V K Q [--budget B]   brute-force spectrum certification
  count-subspaces V K Q                enumeration count vs formula

Exit codes: 0 success/certified, 1 verification failure, 2 usage or
resource error.  Output ordering is deterministic everywhere so that
csv/json outputs can be golden-file tested.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .gf import factor_prime_power, field_of_order
from .identities import IDENTITY_IDS, GridBounds, run_grid
from .oracle import (
    DEFAULT_VERTEX_BUDGET,
    BudgetExceededError,
    build_adjacency,
    certify_spectrum,
    dump_adjacency,
    dump_certification,
    dump_vertices,
    enumerate_subspaces,
)
from .qbinom import gauss, gauss_eval_product
from .spectrum import delsarte_eigenvalue, spectrum_table


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkneser",
        description="Exact Gaussian binomials and q-Kneser graph spectra, with brute-force certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gauss = sub.add_parser("gauss", help="Gaussian binomial [n choose i]_q")
    p_gauss.add_argument("n", type=int, help="top index (any integer)")
    p_gauss.add_argument("i", type=int, help="lower index (nonnegative)")
    p_gauss.add_argument("--q", type=int, default=None, metavar="Q",
                         help="evaluate exactly at integer Q >= 2 instead of printing the polynomial")
    p_gauss.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_gauss.set_defaults(handler=cmd_gauss)

    p_eig = sub.add_parser("eigenvalues", help="spectrum of qK(v,k): eigenvalues and multiplicities")
    p_eig.add_argument("v", type=int, help="ambient dimension (v >= 2k)")
    p_eig.add_argument("k", type=int, help="subspace dimension (k >= 1)")
    p_eig.add_argument("--q", type=int, default=None, metavar="Q",
                       help="evaluate at prime power Q instead of printing polynomials")
    p_eig.add_argument("--form", choices=("simple", "delsarte", "both"), default="simple",
                       help="closed form, alternating-sum form, or both side by side")
    p_eig.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_eig.set_defaults(handler=cmd_eigenvalues)

    p_verify = sub.add_parser("verify", help="verification suites")
    verify_sub = p_verify.add_subparsers(dest="what", required=True)

    p_ident = verify_sub.add_parser("identities", help="check all six identity grids exactly")
    p_ident.add_argument("--max", type=int, default=10, metavar="N",
                         help="grid size: n in [-N, N], i and a in [0, N], m,a,t <= N (default 10)")
    p_ident.add_argument("--format", choices=("table", "json"), default="table")
    p_ident.add_argument("--sabotage", action="store_true", help=argparse.SUPPRESS)
    p_ident.set_defaults(handler=cmd_verify_identities)

    p_spec = verify_sub.add_parser("spectrum", help="certify the predicted spectrum by brute force")
    p_spec.add_argument("v", type=int)
    p_spec.add_argument("k", type=int)
    p_spec.add_argument("q", type=int, help="prime power field order")
    p_spec.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET, metavar="B",
                        help=f"vertex budget (default {DEFAULT_VERTEX_BUDGET})")
    p_spec.add_argument("--dump", metavar="DIR", default=None,
                        help="write vertices.txt, adjacency.txt, certification.json to DIR")
    p_spec.set_defaults(handler=cmd_verify_spectrum)

    p_count = sub.add_parser("count-subspaces", help="enumerate k-subspaces and compare with the formula")
    p_count.add_argument("v", type=int)
    p_count.add_argument("k", type=int)
    p_count.add_argument("q", type=int, help="prime power field order")
    p_count.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET, metavar="B",
                         help=f"vertex budget (default {DEFAULT_VERTEX_BUDGET})")
    p_count.set_defaults(handler=cmd_count_subspaces)

    return parser


# ----------------------------------------------------------------------


def cmd_gauss(args: argparse.Namespace) -> int:
    if args.i < 0:
        raise ValueError(f"lower index must be nonnegative, got {args.i}")
    if args.q is None:
        value = str(gauss(args.n, args.i))
    else:
        value = str(gauss_eval_product(args.n, args.i, args.q))
    if args.format == "table":
        print(value)
    elif args.format == "json":
        print(json.dumps({"schema": "qkneser.gauss@1", "n": args.n, "i": args.i,
                          "q": args.q, "value": value}))
    else:
        _print_csv(["n", "i", "q", "value"],
                   [[args.n, args.i, "" if args.q is None else args.q, value]])
    return 0


def _spectrum_cells(v: int, k: int, q0: int | None, form: str):
    table = spectrum_table(v, k, q0)
    rows = []
    for entry in table.entries:
        simple = entry.eigenvalue
        cell = {"j": entry.j, "multiplicity": _render(entry.multiplicity)}
        if form in ("simple", "both"):
            cell["eigenvalue"] = _render(simple)
        if form in ("delsarte", "both"):
            dels = delsarte_eigenvalue(v, k, entry.j)
            if q0 is not None:
                value = dels.evaluate(q0)
                assert value.denominator == 1
                dels = int(value)
            key = "eigenvalue_delsarte" if form == "both" else "eigenvalue"
            cell[key] = _render(dels)
        rows.append(cell)
    return table, rows


def _render(value) -> str | int:
    return value if isinstance(value, int) else str(value)


def cmd_eigenvalues(args: argparse.Namespace) -> int:
    table, rows = _spectrum_cells(args.v, args.k, args.q, args.form)
    if args.form == "both":
        disagreements = [r["j"] for r in rows if r["eigenvalue"] != r["eigenvalue_delsarte"]]
        if disagreements:
            print(f"error: eigenvalue forms disagree at j={disagreements}", file=sys.stderr)
            return 1
        header = ["j", "eigenvalue", "eigenvalue_delsarte", "multiplicity"]
    else:
        header = ["j", "eigenvalue", "multiplicity"]
    if args.format == "json":
        payload = {"v": table.v, "k": table.k, "q": table.q,
                   "entries": [{key: r[key] for key in header} for r in rows]}
        print(json.dumps(payload))
    elif args.format == "csv":
        _print_csv(header, [[r[key] for key in header] for r in rows])
    else:
        widths = [max(len(str(r[key])) for r in rows + [dict(zip(header, header))]) for key in header]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        for r in rows:
            print("  ".join(str(r[key]).ljust(w) for key, w in zip(header, widths)).rstrip())
    return 0


def cmd_verify_identities(args: argparse.Namespace) -> int:
    if args.max < 1:
        raise ValueError(f"--max must be >= 1, got {args.max}")
    bounds = GridBounds(n_min=-args.max, n_max=args.max, i_min=0, i_max=args.max, mat_max=args.max)
    reports = [run_grid(identity, bounds, sabotage=args.sabotage) for identity in IDENTITY_IDS]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"schema": "qkneser.identity-report@1", "max": args.max,
                          "passed": ok, "reports": [r.to_json_dict() for r in reports]}))
    else:
        for report in reports:
            print(report.render_table())
        print(f"total: {sum(r.checked for r in reports)} instances, "
              f"{sum(len(r.failures) for r in reports)} failures")
    return 0 if ok else 1


def cmd_verify_spectrum(args: argparse.Namespace) -> int:
    ctx = field_of_order(args.q)
    predicted = spectrum_table(args.v, args.k, args.q)
    subspaces = enumerate_subspaces(ctx, args.v, args.k, budget=args.budget)
    adjacency = build_adjacency(subspaces)
    result = certify_spectrum(adjacency, predicted)

    print(f"qK({args.v},{args.k}) over GF({args.q}): {result.vertex_count} vertices, degree {result.degree}")
    print(f"predicted spectrum: " + ", ".join(
        f"{lam}^{mult}" for lam, mult in zip(result.predicted_eigenvalues, result.predicted_multiplicities)))
    print(f"moments tr(A^m), m=0..{result.k}: {result.moments}")
    print(f"annihilation: {'ok' if result.annihilation_ok else 'FAIL'}")
    print(f"moments:      {'ok' if result.moments_ok else 'FAIL'}")
    if result.residual_entry:
        i, j, value = result.residual_entry
        print(f"  nonzero residual at ({i},{j}): {value}")
    for m, expected, actual in result.offending_moments:
        print(f"  moment m={m}: expected {expected}, got {actual}")
    print(f"certified: {'yes' if result.certified else 'NO'}")

    if args.dump is not None:
        directory = Path(args.dump)
        directory.mkdir(parents=True, exist_ok=True)
        dump_vertices(subspaces, directory / "vertices.txt")
        dump_adjacency(adjacency, directory / "adjacency.txt")
        dump_certification(result, directory / "certification.json")
        print(f"dumped vertices.txt, adjacency.txt, certification.json to {directory}")
    return 0 if result.certified else 1


def cmd_count_subspaces(args: argparse.Namespace) -> int:
    ctx = field_of_order(args.q)
    subspaces = enumerate_subspaces(ctx, args.v, args.k, budget=args.budget)
    formula = gauss(args.v, args.k).evaluate(args.q)
    count = len(subspaces)
    print(f"{count} = {formula}")
    return 0 if count == formula else 1


# ----------------------------------------------------------------------


def _print_csv(header: list[str], rows: list[list]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
