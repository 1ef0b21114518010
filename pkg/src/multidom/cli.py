"""Command-line front end: gen | bounds | construct | exact | verify | compare.

All randomness is seeded explicitly; with fixed seeds (and --no-timestamp
for reports) outputs are byte-identical across runs. Exit codes: 0 success,
2 infeasible spec, 1 I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from .bounds import bounds_for_spec
from .construct import construct_parametric, construct_rs, construct_total_rs
from .errors import InfeasibleSpecError, MultidomError
from .graph import (
    FAMILIES,
    GRAPH_FORMATS,
    Graph,
    GraphFamilySpec,
    generate,
    load_graph,
    write_graph,
)
from .oracle import exact_function_number, exact_set_number
from .tuner import compare_bounds
from .verify import DominationSpec, VertexFunction, verify_function, verify_set

SPEC_HELP = (
    "classical | kdom:K | ktuple:K | totalk:K | bracek:K | param:K,L | "
    "rs:RFILE,SFILE | totalrs:RFILE,SFILE  (vector files hold one integer "
    "per vertex, whitespace-separated)"
)


class _Parser(argparse.ArgumentParser):
    # usage problems are parse errors: exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_vector(path: str) -> tuple[int, ...]:
    with open(path, "r", encoding="utf-8") as fh:
        return tuple(int(tok) for tok in fh.read().split())


def parse_spec(text: str) -> DominationSpec:
    if text == "classical":
        return DominationSpec.classical()
    if ":" not in text:
        raise ValueError(f"bad spec {text!r}; expected {SPEC_HELP}")
    head, _, arg = text.partition(":")
    if head in ("kdom", "ktuple", "totalk", "bracek"):
        k = int(arg)
        return {
            "kdom": DominationSpec.k_dominating,
            "ktuple": DominationSpec.k_tuple,
            "totalk": DominationSpec.total_k,
            "bracek": DominationSpec.brace_k,
        }[head](k)
    if head == "param":
        k, l = (int(x) for x in arg.split(","))
        return DominationSpec.parametric(k, l)
    if head in ("rs", "totalrs"):
        rfile, _, sfile = arg.partition(",")
        if not sfile:
            raise ValueError(f"spec {head} needs two vector files: {head}:RFILE,SFILE")
        r = _read_vector(rfile)
        s = _read_vector(sfile)
        return DominationSpec.rs(r, s) if head == "rs" else DominationSpec.total_rs(r, s)
    raise ValueError(f"bad spec {text!r}; expected {SPEC_HELP}")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="FILE", help="read the graph from FILE (edge list or DIMACS)")
    p.add_argument("--family", choices=FAMILIES, help="generate the graph instead")
    p.add_argument("--n", type=int, help="vertex count (family graphs)")
    p.add_argument("--n2", type=int, help="second part size (complete_bipartite)")
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--d", type=int, help="degree (random_regular)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for graph generation and for any construction randomness")


def _add_output_args(p: argparse.ArgumentParser, formats=("json", "csv")) -> None:
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--no-timestamp", action="store_true",
                   help="omit the generated_at field (for golden-file comparisons)")


def _resolve_graph(args) -> Graph:
    if args.graph and args.family:
        raise ValueError("give either --graph or --family, not both")
    if args.graph:
        return load_graph(args.graph)
    if args.family:
        spec = GraphFamilySpec(
            family=args.family, n=args.n, n2=args.n2, p=args.p, d=args.d, seed=args.seed
        )
        return generate(spec)
    raise ValueError("a graph is required: --graph FILE or --family NAME ...")


def _graph_summary(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "min_degree": g.min_degree, "max_degree": g.max_degree}


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict) -> None:
    if not args.no_timestamp:
        payload = dict(payload)
        payload["generated_at"] = datetime.now(timezone.utc).isoformat()
    _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


# -- subcommands ---------------------------------------------------------------


def _cmd_gen(args) -> int:
    g = _resolve_graph(args)
    _emit(args, write_graph(g, args.format))
    return 0


def _cmd_bounds(args) -> int:
    g = _resolve_graph(args)
    spec = parse_spec(args.spec)
    spec.check_feasible(g)
    reports = bounds_for_spec(spec, g.min_degree, g.n, c=args.c, force=args.force)
    if args.format == "csv":
        lines = ["name,applicable,coefficient,absolute,vacuous,reason"]
        for r in reports:
            coeff = "" if r.coefficient is None else repr(r.coefficient)
            absolute = "" if r.absolute is None else repr(r.absolute)
            vac = "" if r.vacuous is None else str(r.vacuous).lower()
            lines.append(f"{r.name},{str(r.applicable).lower()},{coeff},{absolute},"
                         f"{vac},\"{r.reason}\"")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, {
            "graph": _graph_summary(g),
            "spec": spec.label(),
            "bounds": [r.to_dict() for r in reports],
        })
    return 0


def _cmd_construct(args) -> int:
    g = _resolve_graph(args)
    spec = parse_spec(args.spec)
    spec.check_feasible(g)
    kwargs = dict(workers=args.workers, collect_trace=args.trace)
    v = spec.variant
    if v == "rs":
        result = construct_rs(g, spec.r, spec.s, args.seed, args.trials, **kwargs)
    elif v == "total_rs":
        result = construct_total_rs(g, spec.r, spec.s, args.seed, args.trials, **kwargs)
    elif v == "brace_k":
        vec = (spec.k,) * g.n
        result = construct_rs(g, vec, vec, args.seed, args.trials, **kwargs)
    else:
        k, l = spec.requirements()  # closed-neighborhood (k,l) equivalent
        result = construct_parametric(g, k, l, args.seed, args.trials, **kwargs)
    payload = result.to_dict()
    payload["graph"] = _graph_summary(g)
    payload["spec"] = spec.label()
    _emit_json(args, payload)
    return 0


def _cmd_exact(args) -> int:
    g = _resolve_graph(args)
    spec = parse_spec(args.spec)
    kwargs = {}
    if args.limit_n is not None:
        kwargs["limit_n"] = args.limit_n
    if args.node_budget is not None:
        kwargs["node_budget"] = args.node_budget
    if spec.is_set_variant:
        result = exact_set_number(g, spec, **kwargs)
    else:
        result = exact_function_number(g, spec, **kwargs)
    payload = result.to_dict()
    payload["graph"] = _graph_summary(g)
    _emit_json(args, payload)
    return 0


def _cmd_verify(args) -> int:
    g = _resolve_graph(args)
    spec = parse_spec(args.spec)
    with open(args.witness, "r", encoding="utf-8") as fh:
        witness = json.load(fh)
    if spec.is_set_variant:
        if "set" not in witness:
            raise ValueError('set-type spec needs a witness of the form {"set": [ids]}')
        report = verify_set(g, spec, witness["set"])
    else:
        if "values" not in witness:
            raise ValueError('function-type spec needs a witness {"values": [ints]}')
        caps, _ = spec.vectors(g.n)
        f = VertexFunction(tuple(witness["values"]), caps)
        report = verify_function(g, spec, f)
    payload = report.to_dict()
    payload["graph"] = _graph_summary(g)
    payload["spec"] = spec.label()
    _emit_json(args, payload)
    return 0  # an invalid witness is data, not an error


def _cmd_compare(args) -> int:
    report = compare_bounds(args.k, args.delta, args.n)
    if args.format == "csv":
        _emit(args, report.to_csv())
    else:
        _emit_json(args, report.to_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multidom",
                     description="Multiple-domination bounds, constructions and exact solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[], help="generate a family graph and write it out")
    _add_graph_args(p)
    _add_output_args(p, formats=GRAPH_FORMATS)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bounds", help="tabulate every applicable upper bound for a spec")
    _add_graph_args(p)
    p.add_argument("--spec", required=True, help=SPEC_HELP)
    p.add_argument("--c", type=float, default=None, help="threshold constant for the c-bounds")
    p.add_argument("--force", action="store_true",
                   help="evaluate bounds even where not applicable (flagged)")
    _add_output_args(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("construct", help="run the randomized construction for a spec")
    _add_graph_args(p)
    p.add_argument("--spec", required=True, help=SPEC_HELP)
    p.add_argument("--trials", type=int, default=100, help="max randomized trials")
    p.add_argument("--workers", type=int, default=1, help="concurrent trial workers")
    p.add_argument("--trace", action="store_true", help="include the per-trial weight trace")
    _add_output_args(p, formats=("json",))
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("exact", help="exact domination number by exhaustive search")
    _add_graph_args(p)
    p.add_argument("--spec", required=True, help=SPEC_HELP)
    p.add_argument("--limit-n", type=int, default=None, help="vertex-count guard override")
    p.add_argument("--node-budget", type=int, default=None, help="search node budget")
    _add_output_args(p, formats=("json",))
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("verify", help="check a witness file against a spec")
    _add_graph_args(p)
    p.add_argument("--spec", required=True, help=SPEC_HELP)
    p.add_argument("--witness", required=True, metavar="FILE",
                   help='JSON witness: {"set": [ids]} or {"values": [ints]}')
    _add_output_args(p, formats=("json",))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compare", help="threshold-bound comparison table for (k, delta, n)")
    p.add_argument("k", type=int)
    p.add_argument("delta", type=int)
    p.add_argument("n", type=int)
    _add_output_args(p)
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InfeasibleSpecError as exc:
        print(f"multidom: infeasible spec: {exc}", file=sys.stderr)
        return 2
    except (MultidomError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"multidom: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
