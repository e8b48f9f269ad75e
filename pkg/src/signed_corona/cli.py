"""Command-line interface.

Exit codes: 0 success (or true), 1 false or verification failure, 2 usage
or parse error.  Every command accepts ``--json`` and then prints a single
object ``{"command", "inputs", "results"}`` with exact ``"p/q"`` numbers.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .balance import (
    edge_class_counts,
    literal_table_edge_stats,
    literal_table_triad_census,
    predicted_edge_stats,
    predicted_triad_census,
    triad_census,
)
from .corona import CoronaSpec, generalized_corona
from .errors import GraphFileError, SignedCoronaError
from .graph import SignedGraph, is_balanced, marking_of
from .graphfile import read_graph, write_graph
from .poly import Polynomial
from .ratfunc import RationalFunction
from .spectral import CoronalKind, FactoredPoly, coronal, corona_poly, direct_poly, kind_poly
from .verify import FAULTS, SUITES, run_verify

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- serialisation helpers --------------------------------------------------------


def frac_str(c: Fraction | int) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def poly_json(p: Polynomial) -> dict[str, Any]:
    return {"pretty": p.pretty(), "coeffs": [frac_str(c) for c in p.coeffs]}


def ratfun_json(r: RationalFunction) -> dict[str, Any]:
    return {
        "pretty": r.pretty(),
        "num": [frac_str(c) for c in r.num.coeffs],
        "den": [frac_str(c) for c in r.den.coeffs],
    }


def factored_json(fp: FactoredPoly) -> dict[str, Any]:
    out = poly_json(fp.expanded)
    out["factors"] = [
        {"label": f.label, **ratfun_json(f.value), "multiplicity": f.multiplicity} for f in fp.factors
    ]
    return out


def _marks(mu: Sequence[int]) -> str:
    return " ".join("+" if m > 0 else "-" for m in mu)


def _load(path: str) -> SignedGraph:
    try:
        return read_graph(path)
    except GraphFileError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from exc


def _load_spec(base: str, sats: Sequence[str], uniform: bool) -> CoronaSpec:
    g = _load(base)
    hs = [_load(s) for s in sats]
    if uniform:
        if len(hs) != 1:
            raise UsageError(f"--uniform takes exactly one satellite file, got {len(hs)}")
        hs = hs * g.n
    elif len(hs) != g.n:
        raise UsageError(f"base has {g.n} vertices but {len(hs)} satellite files were given")
    return CoronaSpec(g, tuple(hs))


def _emit(args: argparse.Namespace, inputs: dict[str, Any], results: dict[str, Any], text: list[str]) -> None:
    if args.json:
        print(json.dumps({"command": args.command, "inputs": inputs, "results": results}, indent=2))
    else:
        for line in text:
            print(line)


# -- commands -----------------------------------------------------------------------------


def cmd_stats(args: argparse.Namespace) -> int:
    g = _load(args.file)
    mu = marking_of(g)
    pos = sum(1 for *_, s in g.edges if s > 0)
    neg = len(g.edges) - pos
    classes = edge_class_counts(g)
    census = triad_census(g)
    verdict = is_balanced(g)
    results = {
        "vertices": g.n,
        "edges": {"total": len(g.edges), "positive": pos, "negative": neg},
        "marking": list(mu),
        "marking_explicit": g.explicit_marking is not None,
        "edge_classes": vars(classes),
        "triads": list(census),
        "balanced": verdict.balanced,
        "negative_cycle": verdict.cycle,
    }
    text = [
        f"{g.n} vertices",
        f"{len(g.edges)} edges ({pos} positive, {neg} negative)",
        f"marking: {_marks(mu)}" + (" (explicit)" if g.explicit_marking is not None else ""),
        "edge classes: " + ", ".join(f"{k}={v}" for k, v in vars(classes).items()),
        "triads ({},{},{},{})".format(*census),
        "BALANCED" if verdict else "UNBALANCED",
    ]
    if not verdict and verdict.cycle:
        text.append("negative cycle: " + " ".join(map(str, verdict.cycle)))
    _emit(args, {"file": args.file}, results, text)
    return EXIT_OK


def cmd_corona(args: argparse.Namespace) -> int:
    spec = _load_spec(args.base, args.satellites, args.uniform)
    product, layout = generalized_corona(spec)
    write_graph(args.out, product)
    pred_e, lit_e = predicted_edge_stats(spec), literal_table_edge_stats(spec)
    pred_t, lit_t = predicted_triad_census(spec), literal_table_triad_census(spec)
    ranges = [[r.start, r.stop] for r in layout.satellite_ranges]
    results = {
        "out": args.out,
        "vertices": product.n,
        "layout": {"base": [layout.base_range.start, layout.base_range.stop], "satellites": ranges},
        "edge_stats": {"predicted": list(pred_e), "literal_table": list(lit_e)},
        "triads": {"predicted": list(pred_t), "literal_table": list(lit_t)},
    }
    text = [f"base: vertices {_span(layout.base_range)}"]
    text += [f"satellite {l}: vertices {_span(r)}" for l, r in enumerate(layout.satellite_ranges)]
    text.append(f"edges total/positive/negative: {pred_e.total}/{pred_e.positive}/{pred_e.negative}")
    if lit_e != pred_e:
        text.append(f"  global-count table formula gives {lit_e.total}/{lit_e.positive}/{lit_e.negative}")
    text.append("triads ({},{},{},{})".format(*pred_t))
    if lit_t != pred_t:
        text.append("  global-count table formula gives ({},{},{},{})".format(*lit_t))
    text.append(f"wrote {product.n}-vertex product to {args.out}")
    inputs = {"base": args.base, "satellites": args.satellites, "uniform": args.uniform}
    _emit(args, inputs, results, text)
    return EXIT_OK


def _span(r: range) -> str:
    if len(r) == 0:
        return "none"
    return f"{r.start}-{r.stop - 1}" if len(r) > 1 else str(r.start)


def cmd_poly(args: argparse.Namespace) -> int:
    kind = CoronalKind(args.matrix)
    if (args.file is None) == (args.spec is None):
        raise UsageError("give exactly one of FILE or --spec BASE SAT...")
    inputs: dict[str, Any] = {"matrix": kind.value, "method": args.method}
    if args.file is not None:
        if args.method == "factored":
            raise UsageError("--method factored requires --spec BASE SAT...")
        p = kind_poly(_load(args.file), kind)
        inputs["file"] = args.file
        _emit(args, inputs, poly_json(p), [p.pretty()])
        return EXIT_OK

    spec = _load_spec(args.spec[0], args.spec[1:], args.uniform)
    inputs.update(spec=args.spec, uniform=args.uniform)
    direct = direct_poly(spec, kind)
    if args.method == "direct":
        _emit(args, inputs, poly_json(direct), [direct.pretty()])
        return EXIT_OK

    fp = corona_poly(spec, kind)
    agree = fp.expanded == direct
    results = factored_json(fp)
    results["matches_direct"] = agree
    text = [f"{f.label}: ({f.value.pretty()})" + (f"^{f.multiplicity}" if f.multiplicity > 1 else "") for f in fp.factors]
    text.append(f"expanded: {fp.expanded.pretty()}")
    if not agree:
        text.append(f"MISMATCH: direct computation gives {direct.pretty()}")
    _emit(args, inputs, results, text)
    return EXIT_OK if agree else EXIT_FALSE


def cmd_coronal(args: argparse.Namespace) -> int:
    kind = CoronalKind(args.kind)
    chi = coronal(_load(args.file), kind, method=args.method)
    _emit(args, {"file": args.file, "kind": kind.value, "method": args.method}, ratfun_json(chi), [chi.pretty()])
    return EXIT_OK


def cmd_cospectral(args: argparse.Namespace) -> int:
    kind = CoronalKind(args.matrix)
    p1, p2 = kind_poly(_load(args.file1), kind), kind_poly(_load(args.file2), kind)
    same = p1 == p2
    results = {"cospectral": same, "poly1": poly_json(p1), "poly2": poly_json(p2)}
    text = ["COSPECTRAL" if same else "NOT COSPECTRAL"]
    if not same:
        text += [f"  {args.file1}: {p1.pretty()}", f"  {args.file2}: {p2.pretty()}"]
    _emit(args, {"file1": args.file1, "file2": args.file2, "matrix": kind.value}, results, text)
    return EXIT_OK if same else EXIT_FALSE


def cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 1 or args.max_base < 1 or args.max_sat < 0:
        raise UsageError("need --trials >= 1, --max-base >= 1, --max-sat >= 0")
    results = run_verify(args.seed, args.trials, args.max_base, args.max_sat, args.suite, args.inject_fault)
    ok = all(r.passed for r in results)
    text = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        text.append(f"{status} {r.name:<14} {r.checks:5d} checks  {r.seconds:6.2f}s")
        for f in r.failures:
            text.append(f"  {f.detail}")
            text.append("  minimized instance:")
            text.extend("    " + line for line in f.instance.splitlines())
    text.append("ALL PASS" if ok else "FAILURES FOUND")
    inputs = {
        "seed": args.seed,
        "trials": args.trials,
        "max_base": args.max_base,
        "max_sat": args.max_sat,
        "suites": list(args.suite or SUITES),
    }
    payload = {
        "passed": ok,
        "suites": [
            {
                "name": r.name,
                "passed": r.passed,
                "checks": r.checks,
                "failures": [{"detail": f.detail, "instance": f.instance} for f in r.failures],
            }
            for r in results
        ],
    }
    _emit(args, inputs, payload, text)
    return EXIT_OK if ok else EXIT_FALSE


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signed-corona", description="Signed graphs and their corona products.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    kinds = [k.value for k in CoronalKind]

    p = sub.add_parser("stats", parents=[common], help="edge, marking, triad and balance statistics")
    p.add_argument("file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("corona", parents=[common], help="build a (generalized) corona product")
    p.add_argument("base")
    p.add_argument("satellites", nargs="+")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--uniform", action="store_true", help="reuse the single satellite at every base vertex")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("poly", parents=[common], help="characteristic polynomial of A, L or Q")
    p.add_argument("file", nargs="?")
    p.add_argument("--matrix", choices=kinds, default="adj")
    p.add_argument("--method", choices=("direct", "factored"), default="direct")
    p.add_argument("--spec", nargs="+", metavar="FILE", help="base file followed by satellite files")
    p.add_argument("--uniform", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("coronal", parents=[common], help="signed coronal as a rational function")
    p.add_argument("file")
    p.add_argument("--kind", choices=kinds, default="adj")
    p.add_argument("--method", choices=("solve", "rank_one"), default="solve")
    p.set_defaults(func=cmd_coronal)

    p = sub.add_parser("cospectral", parents=[common], help="compare two graphs' polynomials")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--matrix", choices=kinds, default="adj")
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("verify", parents=[common], help="randomized exact checks of every identity")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-base", type=int, default=5)
    p.add_argument("--max-sat", type=int, default=4)
    p.add_argument("--suite", action="append", choices=SUITES, help="run only this suite (repeatable)")
    p.add_argument("--inject-fault", choices=FAULTS, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SignedCoronaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
