"""Command-line interface.

Exit codes: 0 success / property holds, 1 property fails, 2 input error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from .constructions import c3_star, c4_family, t_prime, t_prime_gadget, t_star
from .errors import BudgetExceeded, HypergraphError
from .oracle.audit import THEOREMS, theorem_audit
from .oracle.search import Budget, available_workers, brute_force_ex, brute_force_sat
from .saturation import is_saturated
from .textio import format_text, incidence_dot, read_hypergraph, shadow_dot, write_hypergraph

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(name, value, minimum):
    if value is None or value < minimum:
        raise UsageError(f"--{name} must be at least {minimum}")


def _emit(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_verify(args) -> int:
    _positive("t", args.t, 3)
    H = read_hypergraph(args.file)
    report = is_saturated(H, args.t, collect_certificates=args.certificates)
    payload = report.to_dict(H, args.t)
    lines = [f"{payload['verdict']}: n={H.n} k={H.k} t={args.t} edges={H.m}"]
    if "witness" in payload:
        lines.append(f"Berge-C_{args.t}: {payload['witness']}")
    if "slack_edge" in payload:
        lines.append(f"slack edge: {' '.join(map(str, payload['slack_edge']))}")
    if "certificate_count" in payload:
        lines.append(f"certificates: {payload['certificate_count']}")
        if args.format == "text" and args.verbose:
            lines += [f"  {list(e)}: {w}" for e, w in report.certificates.items()]
    _emit(args, payload, lines)
    return EXIT_OK if report.saturated else EXIT_FALSE


def _construct(args):
    family = args.family
    if family == "c3-star":
        _positive("n", args.n, 1)
        return c3_star(args.n, args.k)
    if family == "c4-family":
        _positive("n", args.n, 1)
        if args.k != 3:
            raise UsageError("c4-family is 3-uniform")
        return c4_family(args.n)
    if family == "t-star":
        return t_star()
    if family == "t-prime":
        return t_prime()
    if family == "gadget":
        _positive("i", args.i, 1)
        return t_prime_gadget(args.i)
    raise UsageError(f"unknown family {family}")


def cmd_construct(args) -> int:
    H = _construct(args)
    if args.check:
        t = 3 if args.family == "c3-star" else 4
        report = is_saturated(H, t)
        if not report.saturated:
            print(f"construction is not saturated for t={t}: {report.verdict.value}", file=sys.stderr)
            return EXIT_FALSE
    if args.out:
        write_hypergraph(H, args.out)
        print(f"wrote {args.out}: n={H.n} k={H.k} edges={H.m}", file=sys.stderr)
    else:
        sys.stdout.write(format_text(H))
    return EXIT_OK


_CSV_FIELDS = ["kind", "n", "k", "t", "optimum", "exhausted", "witness_file"]


def _cached(out_dir: Path, kind, n, k, t):
    table = out_dir / "results.csv"
    if not table.exists():
        return None
    with table.open() as fh:
        for row in csv.DictReader(fh):
            if (row["kind"], row["n"], row["k"], row["t"]) == (kind, str(n), str(k), str(t)) and row["exhausted"] == "True":
                return row
    return None


def _persist(out_dir: Path, kind, n, k, t, result):
    out_dir.mkdir(parents=True, exist_ok=True)
    witness_file = ""
    if result.witness is not None:
        witness_file = f"{kind}_n{n}_k{k}_t{t}.hg"
        write_hypergraph(result.witness, out_dir / witness_file)
    table = out_dir / "results.csv"
    new = not table.exists()
    with table.open("a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=_CSV_FIELDS)
        if new:
            writer.writeheader()
        writer.writerow(
            dict(kind=kind, n=n, k=k, t=t, optimum=result.optimum, exhausted=result.exhausted, witness_file=witness_file)
        )
    return witness_file


def cmd_search(args) -> int:
    _positive("n", args.n, 1)
    _positive("k", args.k, 2)
    _positive("t", args.t, 3)
    if args.workers is not None:
        _positive("workers", args.workers, 1)
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir is not None:
        row = _cached(out_dir, args.kind, args.n, args.k, args.t)
        if row is not None:
            payload = {
                "kind": args.kind, "n": args.n, "k": args.k, "t": args.t,
                "optimum": int(row["optimum"]), "exhausted": True, "explored": None,
                "witness_file": str(out_dir / row["witness_file"]), "cached": True,
            }
            _emit(args, payload, [f"{args.kind} optimum {row['optimum']} (cached), witness {payload['witness_file']}"])
            return EXIT_OK

    budget = Budget(args.max_seconds, args.max_nodes)
    workers = args.workers or available_workers()
    fn = brute_force_sat if args.kind == "sat" else brute_force_ex
    try:
        result = fn(args.n, args.k, args.t, budget, workers)
        code = EXIT_OK
    except BudgetExceeded as exc:
        result = exc.partial
        code = EXIT_BUDGET
        print(f"budget exhausted: {exc}", file=sys.stderr)

    witness_file = None
    if out_dir is not None:
        witness_file = str(out_dir / _persist(out_dir, args.kind, args.n, args.k, args.t, result)) if result.witness else None
    payload = {
        "kind": args.kind, "n": args.n, "k": args.k, "t": args.t,
        "optimum": result.optimum, "exhausted": result.exhausted, "explored": result.explored,
        "witness_file": witness_file,
        "witness": [list(e) for e in result.witness.edges] if result.witness is not None else None,
    }
    lines = [f"{args.kind} optimum {result.optimum} (exhausted={result.exhausted}, explored={result.explored})"]
    if result.witness is not None:
        lines.append("witness:")
        lines.append(format_text(result.witness).rstrip())
    if witness_file:
        lines.append(f"witness file: {witness_file}")
    _emit(args, payload, lines)
    return code


def cmd_bounds(args) -> int:
    _positive("n", args.n, 1)
    _positive("k", args.k, 2)
    _positive("t", args.t, 3)
    rows = bounds_mod.applicable_bounds(args.n, args.k, args.t)
    records = []
    for tag, formula, value, reason in rows:
        if value is None:
            records.append({"theorem": tag, "formula": formula, "value": None, "integer_bound": None, "note": reason})
        else:
            records.append({
                "theorem": tag, "formula": formula, "value": str(value.value),
                "integer_bound": value.integer_bound, "note": None,
            })
    width = max(len(r["formula"]) for r in records)
    lines = [f"{'theorem':<8} {'formula':<{width}} {'value':>8} {'bound':>6}"]
    for r in records:
        if r["value"] is None:
            lines.append(f"{r['theorem']:<8} {r['formula']:<{width}} out-of-domain ({r['note']})")
        else:
            lines.append(f"{r['theorem']:<8} {r['formula']:<{width}} {r['value']:>8} {r['integer_bound']:>6}")
    _emit(args, {"n": args.n, "k": args.k, "t": args.t, "rows": records}, lines)
    return EXIT_OK


def cmd_audit(args) -> int:
    _positive("n-min", args.n_min, 1)
    if args.n_max < args.n_min:
        raise UsageError("--n-max must be at least --n-min")
    ranges = {"n": range(args.n_min, args.n_max + 1)}
    if args.k:
        ranges["k"] = args.k
    if args.t:
        ranges["t"] = args.t
    if args.oracle_n_max:
        ranges["oracle_n"] = range(args.n_min, args.oracle_n_max + 1)
    report = theorem_audit(args.theorem, ranges, Budget(args.max_seconds, args.max_nodes))
    lines = []
    for r in report.rows:
        mark = {True: "PASS", False: "FAIL", None: "SKIP"}[r.passed]
        lines.append(f"{mark} {r.instance}: {r.detail}")
    lines.append(f"{args.theorem}: {'pass' if report.passed else 'FAIL'}")
    _emit(args, report.to_dict(), lines)
    if not report.passed:
        return EXIT_FALSE
    return EXIT_BUDGET if any(r.passed is None for r in report.rows) else EXIT_OK


def cmd_export(args) -> int:
    H = read_hypergraph(args.file)
    sys.stdout.write(shadow_dot(H) if args.mode == "shadow" else incidence_dot(H))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linsat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["text", "json"], default="text")

    def budget(p):
        p.add_argument("--max-seconds", type=float, default=None)
        p.add_argument("--max-nodes", type=int, default=None)

    p = sub.add_parser("verify", help="decide linear Berge-C_t saturation of a hypergraph file")
    p.add_argument("file")
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--certificates", action="store_true", help="collect one cycle per candidate edge")
    p.add_argument("--verbose", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="write one of the explicit constructions")
    p.add_argument("family", choices=["c3-star", "c4-family", "t-star", "t-prime", "gadget"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--i", type=int, help="gadget index 1..18")
    p.add_argument("--out")
    p.add_argument("--check", action="store_true", help="verify saturation before writing")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive saturation / extremal number")
    p.add_argument("kind", choices=["sat", "ex"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out-dir")
    budget(p)
    fmt(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="evaluate the closed-form bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--t", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("audit", help="check a theorem over a window of n")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, nargs="*")
    p.add_argument("--t", type=int, nargs="*")
    p.add_argument("--oracle-n-max", type=int, default=None)
    budget(p)
    fmt(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("export", help="DOT rendering of the shadow or incidence graph")
    p.add_argument("file")
    p.add_argument("--mode", choices=["shadow", "incidence"], default="shadow")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, HypergraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
