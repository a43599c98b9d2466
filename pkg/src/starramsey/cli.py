"""Command-line interface: ``starramsey <command> ...``.

Exit codes: 0 success or claim holds, 1 claim refuted (or a search that
did not reach a verdict), 2 usage or input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .bounds import bounds_for
from .construct import (
    BUILDERS,
    InternalError,
    best_double_star_witness,
    best_substar_witness,
    witness_star,
)
from .core import P4, ColoredCompleteGraph, Pattern, PatternKind, validate_embedding
from .detect import brute_force_find, find_mono
from .extract import (
    HypothesisViolated,
    ProofTrace,
    check_conditions,
    extract_double_star,
    extract_double_star_m1,
    extract_subdivided_star,
)
from .io import (
    FormatError,
    certificate_from_dict,
    certificate_to_dict,
    coloring_from_dict,
    coloring_to_dict,
    is_certificate,
    load_json,
    save_json,
    to_dot,
)
from .search import BudgetExhausted, ramsey_exact

OK, REFUTED, USAGE, INTERNAL = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def _pattern(args: argparse.Namespace) -> Pattern:
    if args.pattern is None:
        raise UsageError("--pattern is required")
    if args.pattern == "p4":
        return P4
    kind = PatternKind(args.pattern)
    if args.n is None:
        raise UsageError("-n is required")
    if kind is PatternKind.STAR:
        return Pattern(kind, args.n)
    if args.m is None:
        raise UsageError("-m is required")
    return Pattern(kind, args.n, args.m)


def _seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("RAMSEY_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"RAMSEY_SEED must be an integer, got {env!r}") from None


def _load_graph(path: str):
    data = load_json(path)
    if is_certificate(data):
        cert = certificate_from_dict(data)
        return cert.graph, cert
    return coloring_from_dict(data), None


def _prefix(G: ColoredCompleteGraph, order: int) -> ColoredCompleteGraph:
    """Coloring induced on vertices 0..order-1."""
    if G.order < order:
        raise HypothesisViolated(f"need at least {order} vertices, input has {G.order}")
    if G.order == order:
        return G
    return ColoredCompleteGraph.from_function(order, G.colors, G.color)


# -- commands ---------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    pattern = _pattern(args)
    seed = _seed(args)
    k = args.k
    if k < 1:
        raise UsageError("-k must be positive")
    name = args.construction
    if name == "auto":
        if pattern.kind is PatternKind.DOUBLE_STAR:
            cert = best_double_star_witness(pattern.n, pattern.m, k, seed=seed)
        elif pattern.kind is PatternKind.SUBDIVIDED_STAR:
            cert = best_substar_witness(pattern.n, pattern.m, k)
        else:
            cert = witness_star(pattern.n, k, args.order or k * (pattern.n - 1) + 1)
    else:
        builder = BUILDERS[name]
        wants = PatternKind.SUBDIVIDED_STAR if name.startswith("substar") else PatternKind.DOUBLE_STAR
        if pattern.kind is not wants:
            raise UsageError(f"construction {name} does not build {pattern.kind.value} witnesses")
        if name == "substar-2-color":
            if k != 2:
                raise UsageError("substar-2-color needs -k 2")
            cert = builder(pattern.n, pattern.m)
        elif name in ("double-star-divisible", "double-star-half-divisible"):
            cert = builder(pattern.n, pattern.m, k, seed=seed)
        else:
            cert = builder(pattern.n, pattern.m, k)
    cert.seed = seed
    data = certificate_to_dict(cert)
    if args.output:
        save_json(data, args.output)
    if args.dot:
        Path(args.dot).write_text(to_dot(cert.graph))
    text = (
        f"{cert.construction_id}: {cert.pattern}-free {k}-coloring of K_{cert.graph.order}"
        f" (verified={cert.verified}), so r >= {cert.claimed_bound}"
    )
    if args.format == "json" and not args.output:
        print(json.dumps(data))
    else:
        summary = {key: data[key] for key in ("construction_id", "order", "claimed_bound", "verified", "seed")}
        _emit(args, summary, text)
    return OK if cert.verified else INTERNAL


def cmd_verify(args: argparse.Namespace) -> int:
    G, cert = _load_graph(args.path)
    if cert is not None:
        pattern = cert.pattern
        if args.pattern is not None and _pattern(args) != pattern:
            raise UsageError("--pattern disagrees with the certificate")
    else:
        pattern = _pattern(args)
    found = find_mono(G, pattern)
    if found is None and G.order <= args.brute_force_limit and brute_force_find(G, pattern) is not None:
        raise InternalError("specialized detector missed a copy found by brute force")
    if found is not None and not validate_embedding(G, found):
        raise InternalError("detector returned an invalid embedding")
    payload = {"pattern": str(pattern), "order": G.order, "free": found is None,
               "embedding": found.to_dict() if found else None}
    if cert is not None:
        payload["claimed_bound"] = cert.claimed_bound
    text = "FREE" if found is None else f"FOUND {json.dumps(found.to_dict())}"
    _emit(args, payload, text)
    return OK if found is None else REFUTED


def cmd_detect(args: argparse.Namespace) -> int:
    G, _ = _load_graph(args.input)
    pattern = _pattern(args)
    found = brute_force_find(G, pattern) if args.brute_force else find_mono(G, pattern)
    payload = {"pattern": str(pattern), "found": found is not None,
               "embedding": found.to_dict() if found else None}
    text = "none" if found is None else json.dumps(found.to_dict())
    _emit(args, payload, text)
    return OK


def cmd_extract(args: argparse.Namespace) -> int:
    G, _ = _load_graph(args.input)
    pattern = _pattern(args)
    k = G.colors
    n, m = pattern.n, pattern.m
    trace = ProofTrace()
    method = args.method
    if pattern.kind is PatternKind.DOUBLE_STAR:
        cond = check_conditions(pattern, k)
        if method == "auto":
            method = "m1" if (not cond["double-star-counting"] and cond["double-star-m1"]) else "counting"
        if method == "m1":
            if m != 1:
                raise UsageError("--method m1 needs -m 1")
            emb = extract_double_star_m1(_prefix(G, k * n + 3), n, trace=trace)
        else:
            emb = extract_double_star(_prefix(G, k * n + m + 2), n, m, trace=trace)
    elif pattern.kind is PatternKind.SUBDIVIDED_STAR:
        emb = extract_subdivided_star(_prefix(G, k * (n - 1) + m + 2), n, m, trace=trace)
    else:
        raise UsageError("extract supports double-star, p4 and substar patterns")
    if not validate_embedding(G, emb):
        raise InternalError("extractor returned an invalid embedding")
    payload: dict[str, Any] = {"embedding": emb.to_dict()}
    if args.explain:
        payload["trace"] = trace.to_dict()
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        if args.explain:
            print("\n".join(trace.lines()))
        print(json.dumps(emb.to_dict()))
    return OK


def cmd_bounds(args: argparse.Namespace) -> int:
    report = bounds_for(_pattern(args), args.k)
    _emit(args, report.to_dict(), report.summary().split(": ", 1)[1])
    return OK


def cmd_search(args: argparse.Namespace) -> int:
    pattern = _pattern(args)
    try:
        res = ramsey_exact(pattern, args.k, args.cap, budget=args.budget,
                           symmetry=not args.no_symmetry, workers=args.workers)
    except BudgetExhausted as exc:
        _emit(args, {"pattern": str(pattern), "k": args.k, "value": None, "budget_exhausted": True,
                     "nodes": exc.nodes}, f"budget exhausted after {exc.nodes} nodes")
        return REFUTED
    payload = {
        "pattern": str(pattern),
        "k": args.k,
        "value": res.value,
        "lower_bound": res.lower_bound,
        "nodes_explored": res.nodes_explored,
        "witness": coloring_to_dict(res.witness) if res.witness is not None else None,
    }
    text = f"r = {res.value}" if res.value is not None else f"r > {args.cap}"
    _emit(args, payload, text)
    return OK if res.value is not None else REFUTED


def cmd_export(args: argparse.Namespace) -> int:
    G, _ = _load_graph(args.input)
    if args.color is not None and not 1 <= args.color <= G.colors:
        raise UsageError(f"--color must lie in 1..{G.colors}")
    dot = to_dot(G, only_color=args.color)
    if args.output:
        Path(args.output).write_text(dot)
    else:
        sys.stdout.write(dot)
    return OK


# -- parser -----------------------------------------------------------------


def _add_pattern(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--pattern", choices=["star", "double-star", "substar", "p4"], required=required)
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starramsey", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a verified witness coloring")
    _add_pattern(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--construction", choices=["auto", *BUILDERS], default="auto")
    p.add_argument("--order", type=int, help="order of the star witness (star pattern only)")
    p.add_argument("--seed", type=int, default=None, help="defaults to $RAMSEY_SEED, then 0")
    p.add_argument("-o", "--output")
    p.add_argument("--dot", help="also write a DOT rendering here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="re-check a certificate or coloring")
    p.add_argument("path")
    _add_pattern(p, required=False)
    p.add_argument("--brute-force-limit", type=int, default=9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("detect", parents=[common], help="look for a monochromatic copy")
    p.add_argument("--input", required=True)
    _add_pattern(p)
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("extract", parents=[common], help="run a proof-following extractor")
    p.add_argument("--input", required=True)
    _add_pattern(p)
    p.add_argument("--method", choices=["auto", "counting", "m1"], default="auto")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("bounds", parents=[common], help="known bounds with provenance")
    _add_pattern(p)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", parents=[common], help="exhaustive search for r(H;k)")
    _add_pattern(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--cap", type=int, default=8)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", help="write a coloring as Graphviz DOT")
    p.add_argument("--input", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--color", type=int, help="only draw this color class")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except (FormatError, UsageError, HypothesisViolated, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
