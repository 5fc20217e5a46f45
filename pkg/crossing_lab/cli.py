"""Command-line driver."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from loguru import logger

from .algorithms.bisection import exact_bisection, heuristic_bisection
from .algorithms.bounds import (
    bs_max_edges,
    corollary_c2k_lb,
    crossing_lemma_lb,
    dual_constants,
    dual_contradiction,
    dual_edge_bound,
    euler_lb,
    girth_lb,
    pst_lb,
    theorem2_constants,
    theorem2_lb,
)
from .algorithms.crossing import exact_crossing_number
from .algorithms.decomposition import decompose, verify_trace
from .algorithms.generators import girth
from .bootstrap import bootstrap
from .core.errors import InvalidParameterError
from .core.configuration import (
    LabConfiguration,
    SuiteConfig,
    load_configuration,
    load_suite_config,
)
from .core.runtime import OracleCache, SuiteContext, run_suite
from .io.corpus import resolve_source
from .io.edgelist import format_edge_list, write_coordinates, write_edge_list
from .io.reports import emit_report, format_report
from .io.traces import TraceSerializer

__all__ = ["build_parser", "main"]

_GENERATOR_NAMES = {
    "grid": "grid",
    "kn": "complete",
    "kst": "complete_bipartite",
    "cycle": "cycle",
    "path": "path",
    "star": "star",
    "petersen": "petersen",
    "random": "random",
    "blowup": "blowup",
}


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossing-lab",
        description="Crossing numbers, bisection width and decomposition experiments.",
    )
    parser.add_argument("--config", type=Path, help="JSON configuration document")
    parser.add_argument("--log-level", default=None, help="loguru level (default from config)")
    parser.add_argument("--workers", type=int, default=None, help="worker threads")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate a graph")
    gen.add_argument("kind", choices=sorted(_GENERATOR_NAMES))
    gen.add_argument("params", nargs="*", help="generator parameters")
    gen.add_argument("--seed", type=int, default=0, help="seed for random graphs")
    gen.add_argument("--out", type=Path, help="edge-list output (stdout when omitted)")
    gen.add_argument("--coords", type=Path, help="coordinate output for drawn graphs")

    cr = commands.add_parser("cr", help="exact crossing number")
    cr.add_argument("mode", choices=["exact"])
    cr.add_argument("--max-k", type=int, default=4)
    cr.add_argument("graph")

    bisect = commands.add_parser("bisect", help="bisection width")
    bisect.add_argument("mode", choices=["exact", "heuristic"])
    bisect.add_argument("--seed", type=int, default=0)
    bisect.add_argument("graph")

    bounds = commands.add_parser("bounds", help="closed-form bounds for a graph")
    bounds.add_argument("--A", dest="A", type=float, default=0.5)
    bounds.add_argument("--alpha", type=float, default=1.0)
    bounds.add_argument("--k", type=int, default=2, help="cycle parameter")
    bounds.add_argument("--N", dest="N", type=float, default=None, help="dual edge threshold")
    bounds.add_argument("--c-pst", type=float, default=None, help="c of the log-squared bound")
    bounds.add_argument(
        "--c-prime-pst", type=float, default=None, help="c' of the log-squared bound"
    )
    bounds.add_argument("graph")

    dec = commands.add_parser("decompose", help="run the decomposition")
    dec.add_argument("--A", dest="A", type=float, default=0.5)
    dec.add_argument("--alpha", type=float, default=1.0)
    dec.add_argument("--policy", choices=["exact", "auto"], default="auto")
    dec.add_argument("--seed", type=int, default=0)
    dec.add_argument("--trace", type=Path, help="trace JSON output")
    dec.add_argument("graph")

    verify = commands.add_parser("verify", help="verify a trace or run one check")
    verify.add_argument("check", help="'trace' or a registered check name")
    verify.add_argument("target", help="trace file, or graph spec/file for a check")
    verify.add_argument(
        "--with-cr", action="store_true", help="evaluate the crossing budget with exact cr"
    )

    suite = commands.add_parser("suite", help="run a verification suite")
    suite.add_argument("suite_config", type=Path)
    suite.add_argument("--out", type=Path, help="report path (stdout when omitted)")
    suite.add_argument("--format", choices=["json", "csv"], default=None)
    return parser


def _generator_spec(kind: str, params: Sequence[str], seed: int) -> str:
    name = _GENERATOR_NAMES[kind]
    values = list(params)
    if kind == "random":
        values.append(str(seed))
    return f"{name}({','.join(values)})"


def _cmd_gen(args: argparse.Namespace, configuration: LabConfiguration) -> int:
    entry = resolve_source(_generator_spec(args.kind, args.params, args.seed))
    if args.out is None:
        sys.stdout.write(format_edge_list(entry.graph))
    else:
        write_edge_list(entry.graph, args.out)
        logger.info("Wrote {} (n={}, e={})", args.out, entry.graph.n, entry.graph.e)
    if args.coords is not None:
        if entry.drawing is None:
            logger.warning("'{}' has no bundled drawing; no coordinates written", entry.name)
        else:
            write_coordinates(entry.drawing, args.coords)
    return 0


def _cmd_cr(args: argparse.Namespace, configuration: LabConfiguration) -> int:
    graph = resolve_source(args.graph).graph
    result = exact_crossing_number(graph, args.max_k, limits=configuration.limits)
    _emit(result.to_dict())
    return 0


def _cmd_bisect(args: argparse.Namespace, configuration: LabConfiguration) -> int:
    graph = resolve_source(args.graph).graph
    if args.mode == "exact":
        result = exact_bisection(
            graph, limits=configuration.limits, workers=configuration.performance.workers
        )
    else:
        result = heuristic_bisection(graph, args.seed, limits=configuration.limits)
    _emit(result.to_dict())
    return 0


def _cmd_bounds(args: argparse.Namespace, configuration: LabConfiguration) -> int:
    if (args.c_pst is None) != (args.c_prime_pst is None):
        raise InvalidParameterError("--c-pst and --c-prime-pst must be given together")
    graph = resolve_source(args.graph).graph
    n, e = graph.n, graph.e
    params = theorem2_constants(args.A, args.alpha)
    dual = dual_constants(args.N if args.N is not None else max(e, 1), args.alpha)
    payload: dict[str, Any] = {
        "n": n,
        "e": e,
        "crossing_lemma": crossing_lemma_lb(max(n, 1), e).to_dict(),
        "theorem2_params": params.to_dict(),
        "density": theorem2_lb(max(n, 1), e, params).to_dict(),
        "bs_max_edges": bs_max_edges(max(n, 1), args.k),
        "dual_params": dual.to_dict(),
        "dual_edge_bound": dual_edge_bound(max(n, 1), dual).to_dict(),
        "dual_contradiction": dual_contradiction(args.alpha),
    }
    if n >= 3:
        payload["euler"] = euler_lb(n, e).to_dict()
        payload["girth"] = girth_lb(n, e, girth(graph)).to_dict()
        payload["c2k"] = corollary_c2k_lb(n, e, args.k).to_dict()
    if args.c_pst is not None and n >= 2:
        payload["pst"] = pst_lb(n, e, args.alpha, args.c_pst, args.c_prime_pst).to_dict()
    _emit(payload)
    return 0


def _cmd_decompose(args: argparse.Namespace, configuration: LabConfiguration) -> int:
    entry = resolve_source(args.graph)
    trace = decompose(
        entry.graph,
        args.A,
        args.alpha,
        args.policy,
        limits=configuration.limits,
        workers=configuration.performance.workers,
        seed=args.seed,
    )
    if args.trace is not None:
        TraceSerializer.save(trace, args.trace)
    _emit(
        {
            "N": trace.split.N,
            "k": trace.k,
            "sigma": trace.sigma,
            "final_edge_count": trace.final_edge_count,
            "diagnostics": list(trace.diagnostics),
        }
    )
    return 0


def _cmd_verify(args: argparse.Namespace, configuration: LabConfiguration) -> int:
    if args.check == "trace":
        trace = TraceSerializer.load(Path(args.target))
        oracle = None
        if args.with_cr:
            context = SuiteContext(params={}, limits=configuration.limits, cache=OracleCache())
            oracle = context.crossing_number
        verdict = verify_trace(trace, oracle)
        _emit(verdict.to_dict())
        return 0 if verdict.passed else 1
    config = SuiteConfig(corpus=[args.target], checks=[args.check])
    report = run_suite(config, configuration=configuration, workers=1)
    sys.stdout.write(format_report(report, "json"))
    return 0 if report.ok else 1


def _cmd_suite(args: argparse.Namespace, configuration: LabConfiguration) -> int:
    config = load_suite_config(args.suite_config)
    fmt = args.format or config.output_format
    report = run_suite(
        config,
        configuration=configuration,
        base_dir=args.suite_config.parent,
        workers=args.workers,
    )
    if args.out is None:
        sys.stdout.write(format_report(report, fmt))
    else:
        emit_report(report, fmt, args.out)
    return 0 if report.ok else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "cr": _cmd_cr,
    "bisect": _cmd_bisect,
    "bounds": _cmd_bounds,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "suite": _cmd_suite,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        configuration = (
            load_configuration(args.config) if args.config is not None else LabConfiguration()
        )
        if args.workers is not None:
            configuration.performance.worker_concurrency = args.workers
        bootstrap(configuration=configuration, level=args.log_level)
        return _COMMANDS[args.command](args, configuration)
    except (RuntimeError, ValueError) as exc:
        logger.error("{}: {}", type(exc).__name__, exc)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
