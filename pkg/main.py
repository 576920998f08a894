#!/usr/bin/env python3
"""
exturan - CLI Entry Point

Exact computations for generalized Turán problems on long cycles: bound
formulas, sharpness constructions, graph analysis and verification sweeps.

Usage:
    python main.py eval f --b 6 --n 6 --k 1 --a 2           # closed-form value
    python main.py construct H --n 10 --k 5 --a 2 --out h.g6
    python main.py analyze h.g6 --s 2 --t 2                 # counts and solvers
    python main.py verify cb --b 4 --n 4 --k 0 --exhaustive  # theorem / baseline sweep
    python main.py search adamus --n 4 --k 1 --r 1           # conjecture search
    python main.py audit posa --seed 7                       # structural audit

Exit codes: 0 ok, 1 violations found, 2 domain or parse error, 3 I/O error,
4 scale limit, 5 internal consistency failure.
"""

import argparse
import inspect
import json
import logging
import sys
from typing import Any, Callable, Optional

import structlog
from pydantic import ValidationError

from src.config import get_settings
from src.exceptions import DomainError, ExturanError
from src.extremal import build_F, build_H, count_kst, eval_f, eval_g
from src.extremal.formulas import THRESHOLDS
from src.graphs import BipartiteGraph, is_biconnected, is_connected, min_degree, read_graph, to_graph6_str, write_graph
from src.models import BoundParams, Claim, RunConfig, THEOREM_CLAIMS, BASELINE_CLAIMS
from src.structure import circumference, core, longest_path_order, max_matching
from src.verify import AUDITS, render_report, run_claim, write_report, write_witnesses
from src.verify.sweeps import default_class

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_IO = 3

THRESHOLD_KINDS = {
    "threshold-cb": Claim.CB,
    "threshold-pb": Claim.PB,
    "threshold-mb": Claim.MB,
    "threshold-c": Claim.C,
    "threshold-p": Claim.P,
}
CONJECTURE_NAMES = {"adamus": Claim.ADAMUS, "adamus_edges": Claim.ADAMUS, "conj_41": Claim.CONJ_41}


def configure_logging(level: str) -> None:
    """structlog on top of stdlib logging, bound to stderr so stdout stays machine-readable."""
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level.upper(), logging.INFO), format="%(message)s", force=True)
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def _params(args: argparse.Namespace) -> BoundParams:
    n = args.n if args.n is not None else 0
    return BoundParams(
        b=args.b if args.b is not None else n,
        n=n,
        k=args.k if args.k is not None else 0,
        r=args.r,
        s=args.s,
        t=args.t,
    )


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise DomainError(f"missing required flag(s): {', '.join(missing)}")


def _emit(payload: dict[str, Any], fmt: str, plain: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(str(payload[key]) for key in keys))
    else:
        print(plain)


def cmd_eval(args: argparse.Namespace) -> int:
    """Print an exact closed-form value."""
    if args.kind == "f":
        _require(args, "b", "n", "a")
        m = args.m if args.m is not None else args.n - (args.k or 0)
        value = eval_f(args.b, args.n, m, args.a, args.s, args.t)
    elif args.kind == "g":
        _require(args, "n", "k", "a")
        value = eval_g(args.n, args.k, args.a, args.s, args.t)
    else:
        _require(args, "n", "k")
        value = THRESHOLDS[THRESHOLD_KINDS[args.kind]](_params(args))
    _emit({"kind": args.kind, "value": str(value)}, args.format or "plain", str(value))
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    """Build F or H, optionally write graph6 + sidecar, print a summary."""
    check = False if args.no_check else None
    if args.kind == "F":
        _require(args, "b", "n", "k", "a")
        construction = build_F(args.b, args.n, args.k, args.a, check=check)
    else:
        _require(args, "n", "k", "a")
        construction = build_H(args.n, args.k, args.a, check=check)
    g = construction.graph
    summary: dict[str, Any] = {
        **construction.metadata(),
        "order": g.order,
        "size": g.size,
        "min_degree": min_degree(g),
    }
    if args.analyze:
        summary["circumference"] = circumference(g)
    if args.out:
        try:
            write_graph(args.out, construction.host, params=construction.params, region_of=list(construction.region_of))
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        summary["path"] = str(args.out)
    else:
        summary["graph6"] = to_graph6_str(g)
    label = ",".join(f"{key}={value}" for key, value in construction.params.items())
    plain = f"{construction.kind}({label}): order {g.order}, size {g.size}, min degree {summary['min_degree']}"
    if args.analyze:
        plain += f", circumference {summary['circumference']}"
    if not args.out:
        plain += f"\n{summary['graph6']}"
    _emit(summary, args.format or "plain", plain)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    """Counts, solver values, cores and connectivity of one graph."""
    host = read_graph(args.path)
    g = host.graph if isinstance(host, BipartiteGraph) else host
    result: dict[str, Any] = {
        "order": g.order,
        "size": g.size,
        "connected": is_connected(g),
        "biconnected": is_biconnected(g),
        "min_degree": min_degree(g) if g.order else 0,
        f"kst_{args.s}_{args.t}": str(count_kst(g, args.s, args.t)),
        "circumference": circumference(g, host.x_mask if isinstance(host, BipartiteGraph) else None),
        "longest_path_order": longest_path_order(g),
    }
    if isinstance(host, BipartiteGraph):
        result["max_matching"] = max_matching(host)
    for alpha in args.alpha:
        result[f"core_{alpha + 1}"] = core(g, alpha).size
    plain = "\n".join(f"{key}: {str(value).lower() if isinstance(value, bool) else value}" for key, value in result.items())
    _emit(result, args.format or "plain", plain)
    return EXIT_OK


def _sweep_command(args: argparse.Namespace, claim: Claim) -> int:
    config = RunConfig(
        command=args.command,
        format=args.format or "json",
        jobs=args.jobs,
        seed=args.seed,
        samples=None if args.exhaustive else args.samples,
        timing=args.timing,
        out=args.out,
    )
    _require(args, "n")
    p = _params(args)
    spec = default_class(claim, p, config.samples, config.seed, args.connected, args.min_edges)
    report = run_claim(claim, p, spec, jobs=config.jobs, dedup=args.dedup)
    try:
        if config.out:
            write_report(report, config.out, config.format, config.timing)
            logger.info("Report written", path=str(config.out))
        else:
            print(render_report(report, config.format, config.timing))
        if args.witnesses:
            write_witnesses(report, args.witnesses)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_VIOLATIONS if report.violation_count else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    return _sweep_command(args, Claim(args.claim))


def cmd_search(args: argparse.Namespace) -> int:
    return _sweep_command(args, CONJECTURE_NAMES[args.claim])


def cmd_audit(args: argparse.Namespace) -> int:
    """Structural audits: Pósa bounds, core order, closure contract, convexity."""
    claim = Claim(args.claim)
    options: dict[str, Any] = {}
    if claim not in (Claim.CONVEXITY_F, Claim.CONVEXITY_G):
        if args.seed is None:
            raise DomainError("--seed is required for randomized audits")
        options["seed"] = args.seed
    audit = AUDITS[claim]
    accepted = inspect.signature(audit).parameters
    for name in ("graphs", "pairs", "paths", "instances"):
        value = getattr(args, name)
        if value is None:
            continue
        if name not in accepted:
            raise DomainError(f"--{name} does not apply to the {claim.value} audit")
        options[name] = value
    report = audit(**options)
    fmt = args.format or "json"
    try:
        if args.out:
            write_report(report, args.out, fmt, args.timing)
        else:
            print(render_report(report, fmt, args.timing))
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_VIOLATIONS if report.violation_count else EXIT_OK


def _add_params(parser: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        default = 1 if name in ("r", "s", "t") else None
        parser.add_argument(f"--{name}", type=int, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="exturan: generalized Turán numbers for long cycles",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--log-level", default=None, help="Override EXTURAN_LOG_LEVEL")
    parser.add_argument("--progress", action="store_true", help="Show sweep progress on stderr")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=["json", "csv", "plain"], default=None)

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    # eval command
    eval_parser = subparsers.add_parser("eval", parents=[output], help="Evaluate f, g or a threshold")
    eval_parser.add_argument("kind", choices=["f", "g", *THRESHOLD_KINDS])
    _add_params(eval_parser, "b", "n", "k", "m", "a", "r", "s", "t")

    # construct command
    construct_parser = subparsers.add_parser("construct", parents=[output], help="Build F or H")
    construct_parser.add_argument("kind", choices=["F", "H"])
    _add_params(construct_parser, "b", "n", "k", "a")
    construct_parser.add_argument("--out", help="graph6 output path (sidecar written alongside)")
    construct_parser.add_argument("--analyze", action="store_true", help="Also report the circumference")
    construct_parser.add_argument("--no-check", action="store_true", help="Skip the construction self-checks")

    # analyze command
    analyze_parser = subparsers.add_parser("analyze", parents=[output], help="Analyze a graph6 file")
    analyze_parser.add_argument("path")
    _add_params(analyze_parser, "s", "t")
    analyze_parser.add_argument("--alpha", type=int, action="append", default=None, help="Core parameter (repeatable)")

    # verify / search commands
    sweep = argparse.ArgumentParser(add_help=False, parents=[output])
    _add_params(sweep, "b", "n", "k", "r", "s", "t")
    sweep.add_argument("--exhaustive", action="store_true", help="Walk every labeled graph (default)")
    sweep.add_argument("--samples", type=int, default=None, help="Random mode: number of seeded samples")
    sweep.add_argument("--seed", type=int, default=None)
    sweep.add_argument("--jobs", type=int, default=None)
    sweep.add_argument("--connected", action="store_true", help="Require connectivity beyond the claim's hypotheses")
    sweep.add_argument("--min-edges", type=int, default=0)
    sweep.add_argument("--dedup", action="store_true", help="Drop isomorphic extremal witnesses")
    sweep.add_argument("--out", default=None, help="Report path (stdout when omitted)")
    sweep.add_argument("--witnesses", default=None, help="Directory for standalone witness graph6 files")
    sweep.add_argument("--timing", action="store_true", help="Include runtime_ms in the report")

    verify_parser = subparsers.add_parser("verify", parents=[sweep], help="Theorem or baseline sweep")
    verify_parser.add_argument("claim", choices=sorted(c.value for c in THEOREM_CLAIMS | BASELINE_CLAIMS))
    search_parser = subparsers.add_parser("search", parents=[sweep], help="Conjecture counterexample search")
    search_parser.add_argument("claim", choices=sorted(CONJECTURE_NAMES))

    # audit command
    audit_parser = subparsers.add_parser("audit", parents=[output], help="Structural property audits")
    audit_parser.add_argument("claim", choices=sorted(c.value for c in AUDITS))
    audit_parser.add_argument("--seed", type=int, default=None)
    audit_parser.add_argument("--graphs", type=int, default=None)
    audit_parser.add_argument("--pairs", type=int, default=None)
    audit_parser.add_argument("--paths", type=int, default=None)
    audit_parser.add_argument("--instances", type=int, default=None)
    audit_parser.add_argument("--out", default=None)
    audit_parser.add_argument("--timing", action="store_true")

    return parser


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "eval": cmd_eval,
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "search": cmd_search,
    "audit": cmd_audit,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    configure_logging(args.log_level or ("DEBUG" if settings.debug else settings.log_level))

    if not args.command:
        parser.print_help(sys.stderr)
        return DomainError.exit_code
    if args.progress:
        settings.progress = True
    if getattr(args, "alpha", None) is None and args.command == "analyze":
        args.alpha = [1]
    if getattr(args, "jobs", None) is None and args.command in ("verify", "search"):
        args.jobs = settings.jobs

    try:
        return COMMANDS[args.command](args)
    except ExturanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        message = "; ".join(error["msg"] for error in exc.errors())
        print(f"error: {message}", file=sys.stderr)
        return DomainError.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
