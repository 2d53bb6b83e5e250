"""Command-line workbench.

Subcommands: ``gen`` builds a graph from a family spec, ``sparsify``
runs the sparsifier over an edge list, ``verify`` reports the worst
relative cut error between a graph and a skeleton, ``ni`` prints the
forest decomposition, and ``bench`` times sparsify across sizes.

Exit codes: 0 on success, 1 on usage or input errors, 2 when a run's
own invariant checks fail.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import CutkitError, EdgeListFormatError, InvalidSpec, InvariantViolation
from .forests import decompose
from .generators import generate
from .graph import Multigraph
from .io import format_edge_list, parse_edge_list
from .oracle import max_relative_cut_error
from .report import format_table, render_figure, run_bench
from .sparsify import (
    DEFAULT_RHO_CONSTANT,
    DEFAULT_SAMPLING_CONSTANT,
    SparsifyConfig,
    sparsify,
)

DEFAULT_SEED = 0


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; route that through our own
    # error type so run_cli can report usage problems as exit code 1
    def error(self, message):
        raise _UsageError(message)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _read_graph(path: str | None):
    return parse_edge_list(_read_text(path))


def _read_unweighted(path: str | None) -> Multigraph:
    graph = _read_graph(path)
    if not isinstance(graph, Multigraph):
        raise EdgeListFormatError("expected an unweighted edge list")
    return graph


def _cmd_gen(args) -> int:
    graph = generate(args.spec, seed=args.seed)
    _write_text(args.output, format_edge_list(graph))
    return 0


def _cmd_sparsify(args) -> int:
    graph = _read_unweighted(args.input)
    config = SparsifyConfig(
        epsilon=args.epsilon,
        rho_constant=args.rho_constant,
        sampling_constant=args.sampling_constant,
        seed=args.seed,
    )
    skeleton, trace = sparsify(graph, config)
    _write_text(args.output, format_edge_list(skeleton))
    if args.trace is not None:
        Path(args.trace).write_text(
            json.dumps(trace.to_dict(), indent=2) + "\n", encoding="utf-8"
        )
    return 0


def _cmd_verify(args) -> int:
    graph = _read_graph(args.graph)
    skeleton = _read_graph(args.skeleton)
    if args.samples is not None:
        report = max_relative_cut_error(
            graph,
            skeleton,
            mode="sampled",
            sample_count=args.samples,
            rng=np.random.default_rng(args.seed),
        )
    else:
        report = max_relative_cut_error(graph, skeleton, mode="exact")
    _write_text(args.output, json.dumps(report.to_dict(), indent=2) + "\n")
    return 0


def _cmd_ni(args) -> int:
    graph = _read_unweighted(args.input)
    labeling = decompose(graph)
    endpoints = graph.edges.tolist()
    index = labeling.forest_index.tolist()
    lines = [f"{eid} {u} {v} {index[eid]}" for eid, (u, v) in enumerate(endpoints)]
    _write_text(args.output, "\n".join(lines) + ("\n" if lines else ""))
    return 0


def _cmd_bench(args) -> int:
    try:
        sizes = [int(part) for part in args.sizes.split(",") if part.strip()]
    except ValueError:
        raise InvalidSpec(f"--sizes expects comma-separated integers, got {args.sizes!r}") from None
    if not sizes:
        raise InvalidSpec("--sizes lists no sizes")
    rows = run_bench(
        sizes,
        family=args.family,
        density=args.density,
        epsilon=args.epsilon,
        rho_constant=args.rho_constant,
        sampling_constant=args.sampling_constant,
        seed=args.seed,
        repeats=args.repeat,
    )
    _write_text(args.output, format_table(rows))
    if args.figure is not None:
        render_figure(rows, args.figure)
    return 0


def _add_seed(parser) -> None:
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="run seed (default %(default)s)")


def _add_constants(parser) -> None:
    parser.add_argument("--rho-constant", type=float, help="density threshold constant")
    parser.add_argument("--sampling-constant", type=float, help="keep-probability constant")


def build_parser() -> _Parser:
    parser = _Parser(prog="cutkit", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = commands.add_parser("gen", help="generate a graph from a family spec")
    gen.add_argument("spec", help="family spec, e.g. gnp:n=40,p=0.3")
    gen.add_argument("-o", "--output", help="output path (default stdout)")
    _add_seed(gen)
    gen.set_defaults(handler=_cmd_gen)

    sp = commands.add_parser("sparsify", help="sparsify an unweighted edge list")
    sp.add_argument("-e", "--epsilon", type=float, required=True, help="target relative cut error")
    sp.add_argument("-i", "--input", help="input edge list (default stdin)")
    sp.add_argument("-o", "--output", help="output edge list (default stdout)")
    sp.add_argument("--trace", help="also write the JSON run trace here")
    _add_constants(sp)
    sp.set_defaults(rho_constant=DEFAULT_RHO_CONSTANT, sampling_constant=DEFAULT_SAMPLING_CONSTANT)
    _add_seed(sp)
    sp.set_defaults(handler=_cmd_sparsify)

    ver = commands.add_parser("verify", help="compare cut weights of a graph and a skeleton")
    ver.add_argument("-g", "--graph", required=True, help="original graph edge list")
    ver.add_argument("-s", "--skeleton", required=True, help="skeleton edge list")
    mode = ver.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="enumerate every cut (default)")
    mode.add_argument("--samples", type=int, help="check this many random cuts instead")
    ver.add_argument("-o", "--output", help="report path (default stdout)")
    _add_seed(ver)
    ver.set_defaults(handler=_cmd_verify)

    ni = commands.add_parser("ni", help="print the forest decomposition of a graph")
    ni.add_argument("-i", "--input", required=True, help="input edge list")
    ni.add_argument("-o", "--output", help="output path (default stdout)")
    ni.set_defaults(handler=_cmd_ni)

    bench = commands.add_parser("bench", help="time sparsify across instance sizes")
    bench.add_argument("--family", default="gnm", help="graph family (default %(default)s)")
    bench.add_argument("--sizes", required=True, help="comma-separated instance sizes")
    bench.add_argument("--repeat", type=int, default=3, help="runs per size (default %(default)s)")
    bench.add_argument(
        "--density",
        type=int,
        default=16,
        help="edges per vertex for gnm, degree for random-regular (default %(default)s)",
    )
    bench.add_argument("--epsilon", type=float, default=1.0, help="epsilon (default %(default)s)")
    _add_constants(bench)
    bench.set_defaults(rho_constant=0.05, sampling_constant=0.5)
    bench.add_argument("--figure", help="also render a log-log runtime plot to this file")
    bench.add_argument("-o", "--output", help="table path (default stdout)")
    _add_seed(bench)
    bench.set_defaults(handler=_cmd_bench)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except (CutkitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())
