"""Command-line harness: graph generation, ED runs, sweeps, and the suite.

Commands
--------
gen          write a graph JSON file
ed           print per-vertex and total ED for one graph
verify       emit the dual-route EDReport as JSON
sweep-theta  CSV/JSON rows (theta, E_sv, E_cf, discrepancy) over [0, pi]
sweep-alpha  CSV/JSON rows (t, E, S_nats, D_HS) for the single-edge pair
suite        run the seeded property battery; nonzero exit on any violation

Angles are radians unless --deg is given. Floats are printed at 17
significant digits so identical configurations produce byte-identical
artifacts. Exit codes: 0 success, 1 invariant violation found, 2 bad
input/config, 64 capability exceeded (M over the qubit cap, default 20,
overridable via --max-qubits or DIGRAPH_ED_MAX_QUBITS).
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import digraph, suite as suite_mod
from .entanglement import GateParams, alpha_sweep, ed_per_vertex, ed_total, fmt17, verify_graph
from .errors import CapacityError, DigraphEdError
from .statevector import build_graph_state

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BAD_INPUT = 2
EXIT_CAPABILITY = 64

DEFAULT_MAX_QUBITS_CLI = 20


def _default_cap() -> int:
    env = os.environ.get("DIGRAPH_ED_MAX_QUBITS")
    return int(env) if env else DEFAULT_MAX_QUBITS_CLI


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="PATH", help="graph JSON file")
    p.add_argument("--kind", choices=digraph.GENERATOR_KINDS, help="generator kind")
    p.add_argument("--M", type=int, help="number of vertices/qubits")
    p.add_argument("--p", type=float, help="edge probability (erdos_renyi)")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument(
        "--allow-antiparallel",
        action="store_true",
        help="admit (a,b)+(b,a) pairs; ED comes from the statevector only",
    )


def _add_angles(p: argparse.ArgumentParser, theta: bool = True) -> None:
    if theta:
        p.add_argument("--theta", type=float, required=True, help="gate angle theta")
    p.add_argument("--psi", type=float, default=0.0, help="gate angle psi")
    p.add_argument("--deg", action="store_true", help="interpret angles as degrees")


def _add_output(p: argparse.ArgumentParser, formats=("csv", "json")) -> None:
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    if formats:
        p.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="digraph-ed", description=__doc__.splitlines()[0])
    ap.add_argument(
        "--max-qubits",
        type=int,
        default=None,
        help=f"qubit cap (default {DEFAULT_MAX_QUBITS_CLI}, env DIGRAPH_ED_MAX_QUBITS)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and write its JSON")
    p.add_argument("--kind", choices=digraph.GENERATOR_KINDS, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ed", help="print per-vertex and total ED")
    _add_graph_source(p)
    _add_angles(p)
    p.set_defaults(func=cmd_ed)

    p = sub.add_parser("verify", help="emit the dual-route EDReport as JSON")
    _add_graph_source(p)
    _add_angles(p)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep-theta", help="sweep theta over [0, pi]")
    _add_graph_source(p)
    _add_angles(p, theta=False)
    p.add_argument("--grid", type=int, default=101, help="number of grid points")
    _add_output(p)
    p.set_defaults(func=cmd_sweep_theta)

    p = sub.add_parser("sweep-alpha", help="initial-state sweep on the single-edge pair")
    _add_angles(p)
    p.add_argument("--grid", type=int, default=101, help="number of grid points")
    _add_output(p)
    p.set_defaults(func=cmd_sweep_alpha)

    p = sub.add_parser("suite", help="run the seeded property battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graphs", type=int, default=200)
    p.add_argument("--max-M", dest="max_m", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1, help="parallel verification workers")
    p.set_defaults(func=cmd_suite)

    return ap


def _angle(args, value: float) -> float:
    return math.radians(value) if getattr(args, "deg", False) else value


def _cap(args) -> int:
    return args.max_qubits if args.max_qubits is not None else _default_cap()


def _resolve_graph(args) -> digraph.DirectedGraph:
    from_file = args.graph is not None
    from_gen = args.kind is not None
    if from_file == from_gen:
        raise DigraphEdError("supply exactly one graph source: --graph PATH or --kind/--M")
    if from_file:
        g = digraph.load_graph(args.graph, allow_antiparallel=args.allow_antiparallel)
    else:
        if args.M is None:
            raise DigraphEdError("--kind requires --M")
        if args.kind == "erdos_renyi" and args.p is None:
            raise DigraphEdError("erdos_renyi requires --p")
        params = {} if args.p is None else {"p": args.p}
        g = digraph.generate(args.kind, args.M, params, args.seed)
    cap = _cap(args)
    if g.M > cap:
        raise CapacityError(g.M, cap)
    return g


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.kind == "erdos_renyi" and args.p is None:
        raise DigraphEdError("erdos_renyi requires --p")
    params = {} if args.p is None else {"p": args.p}
    g = digraph.generate(args.kind, args.M, params, args.seed)
    _emit(digraph.dump_graph(g), args.out)
    return EXIT_OK


def cmd_ed(args) -> int:
    g = _resolve_graph(args)
    gp = GateParams(_angle(args, args.theta), _angle(args, args.psi))
    state = build_graph_state(
        g, gp, allow_antiparallel=args.allow_antiparallel, max_qubits=_cap(args)
    )
    lines = [f"E({i}) = {fmt17(ed_per_vertex(state, i))}" for i in range(g.M)]
    lines.append(f"E_total = {fmt17(ed_total(state))}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _resolve_graph(args)
    gp = GateParams(_angle(args, args.theta), _angle(args, args.psi))
    source = args.graph if args.graph else f"kind={args.kind} M={args.M} seed={args.seed}"
    report = verify_graph(
        g, gp, allow_antiparallel=args.allow_antiparallel, seed_info=source
    )
    _emit(report.to_json() + "\n", args.out)
    return EXIT_OK


def _null_or(v) -> str:
    return "null" if v is None else fmt17(v)


def cmd_sweep_theta(args) -> int:
    g = _resolve_graph(args)
    if args.grid < 2:
        raise DigraphEdError(f"--grid must be >= 2, got {args.grid}")
    psi = _angle(args, args.psi)
    rows = []
    for theta in np.linspace(0.0, math.pi, args.grid):
        rep = verify_graph(
            g, GateParams(float(theta), psi), allow_antiparallel=args.allow_antiparallel
        )
        rows.append(
            (float(theta), rep.total_statevector, rep.total_closed_form, rep.discrepancy)
        )
    if args.format == "csv":
        text = "theta,E_sv,E_cf,discrepancy\n" + "".join(
            f"{fmt17(t)},{fmt17(e)},"
            f"{'' if cf is None else fmt17(cf)},{'' if d is None else fmt17(d)}\n"
            for t, e, cf, d in rows
        )
    else:
        body = ", ".join(
            "{"
            + f'"theta": {fmt17(t)}, "E_sv": {fmt17(e)}, '
            + f'"E_cf": {_null_or(cf)}, "discrepancy": {_null_or(d)}'
            + "}"
            for t, e, cf, d in rows
        )
        text = "[" + body + "]\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_sweep_alpha(args) -> int:
    gp = GateParams(_angle(args, args.theta), _angle(args, args.psi))
    sweep = alpha_sweep(gp, args.grid)
    if args.format == "csv":
        text = "t,E,S_nats,D_HS\n" + "".join(
            f"{fmt17(t)},{fmt17(e)},{fmt17(s)},{fmt17(d)}\n" for t, e, s, d in sweep.samples
        )
    else:
        body = ", ".join(
            "{"
            + f'"t": {fmt17(t)}, "E": {fmt17(e)}, "S_nats": {fmt17(s)}, "D_HS": {fmt17(d)}'
            + "}"
            for t, e, s, d in sweep.samples
        )
        text = "[" + body + "]\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_suite(args) -> int:
    report = suite_mod.run_suite(
        seed=args.seed, n_graphs=args.graphs, max_m=args.max_m, jobs=args.jobs
    )
    sys.stdout.write("\n".join(report.summary_lines()) + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse reports usage errors with code 2
        return int(e.code) if e.code else EXIT_OK
    try:
        return args.func(args)
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (DigraphEdError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
