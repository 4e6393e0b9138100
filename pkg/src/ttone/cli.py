"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 graph outside the algorithm's
class, 3 timeout, 4 internal invariant failure (a bug).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import generators
from .bounds import COLORERS
from .coloring import label_str, verify_coloring
from .cubic import color_cubic_8
from .errors import GraphClassError, InternalInvariant, TToneError
from .exact import Status, check_seven_label_claim, exact_tau, find_coloring, heawood_tau2
from .graph import Graph
from .io import format_edge_list, parse_edge_list, read_coloring_json, write_coloring_json
from .suite import SUITE_ALGORITHMS, run_bounds_suite

EXIT_OK, EXIT_INPUT, EXIT_CLASS, EXIT_TIMEOUT, EXIT_INTERNAL = range(5)

ALGORITHMS = tuple(COLORERS) + ("cubic8",)


class InputError(TToneError):
    pass


def graph_from_spec(spec: str, seed: int = 0) -> Graph:
    """``heawood``, ``complete:4``, ``complete_bipartite:2,3`` or
    ``random:<kind>:<n>:<param>`` (seeded by ``--seed``)."""
    name, _, rest = spec.partition(":")
    if name == "random":
        try:
            kind, n, param = rest.split(":")
            return generators.random_family(kind, int(n), float(param) if "." in param else int(param), seed)
        except ValueError as exc:
            raise InputError(f"bad random spec {spec!r}: {exc}") from None
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
        return generators.named(name, *params)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad graph spec {spec!r}: {exc}") from None


def load_graph(args) -> Graph:
    if (args.graph is None) == (args.gen is None):
        raise InputError("give exactly one of a graph file or --gen")
    if args.gen is not None:
        return graph_from_spec(args.gen, args.seed)
    try:
        text = Path(args.graph).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return parse_edge_list(text)


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_color(args) -> int:
    g = load_graph(args)
    if args.algorithm == "cubic8":
        res = color_cubic_8(g)
        text = write_coloring_json(
            res.coloring, algorithm="cubic8", valid=True,
            stats={"budget": 8, "fallbacks": res.fallbacks, "trace": [str(s).strip() for s in res.trace]},
        )
    else:
        coloring, report = COLORERS[args.algorithm](g, args.t)
        text = write_coloring_json(coloring, report)
    emit(text, args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    g = load_graph(args)
    if args.k is not None:
        return _fixed_k(g, args)
    res = exact_tau(g, args.t, args.kmax, timeout=args.timeout_secs)
    if res.status is Status.TIMEOUT:
        print(f"timeout after {res.stats.elapsed:.1f}s (k up to {max(res.per_k, default=args.t)} searched)")
        return EXIT_TIMEOUT
    if res.status is Status.ABSENT:
        print(f"above cap: no {args.t}-tone {args.kmax}-coloring")
    else:
        print(res.value)
        if args.out:
            Path(args.out).write_text(
                write_coloring_json(res.witness, res.stats, algorithm="exact", valid=True)
            )
    return EXIT_OK


def _fixed_k(g: Graph, args) -> int:
    res = find_coloring(g, args.t, args.k, timeout=args.timeout_secs)
    if res.status is Status.TIMEOUT:
        print(f"timeout after {res.stats.elapsed:.1f}s")
        return EXIT_TIMEOUT
    if res.status is Status.ABSENT:
        print(f"absent: no {args.t}-tone {args.k}-coloring")
        return EXIT_OK
    print(f"found: {args.t}-tone {args.k}-coloring")
    if args.out:
        Path(args.out).write_text(write_coloring_json(res.coloring, res.stats, algorithm="exact", valid=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args)
    try:
        coloring = read_coloring_json(Path(args.coloring).read_text())
    except OSError as exc:
        raise InputError(str(exc)) from None
    bad = verify_coloring(g, coloring)
    missing = [v for v in range(g.n) if v not in coloring]
    for viol in bad:
        print(
            f"violation: {viol.u} ({label_str(coloring[viol.u])}) and {viol.v} "
            f"({label_str(coloring[viol.v])}) share {viol.shared} at distance {viol.dist}"
        )
    if missing:
        print(f"uncolored: {' '.join(map(str, missing))}")
    if bad or missing:
        print("invalid")
        return EXIT_INPUT
    print("valid")
    return EXIT_OK


def cmd_gen(args) -> int:
    emit(format_edge_list(load_graph(args)), args.out)
    return EXIT_OK


def cmd_heawood(args) -> int:
    cert = heawood_tau2(timeout=args.timeout_secs)
    print(f"Heawood tau_2 = {cert.value}")
    print("upper: 7-coloring verified")
    print(f"lower: no 6-coloring ({cert.lower.stats.nodes} search nodes)")
    return EXIT_OK


def cmd_claims(args) -> int:
    res = check_seven_label_claim()
    bad = 0 if res.holds else 1
    print(f"{res.checked} families checked, {bad} counterexamples")
    if res.counterexample:
        print("counterexample: " + " ".join(label_str(L) for L in res.counterexample))
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_suite(args) -> int:
    algorithms = [args.algorithm] if args.algorithm else list(SUITE_ALGORITHMS)
    records = run_bounds_suite(args.instances, args.seed, algorithms)
    lines = [json.dumps(r, sort_keys=True) for r in records]
    failed = sum(1 for r in records if not r["ok"])
    emit("\n".join(lines) + "\n", args.out)
    print(f"{len(records)} instances, {failed} failures", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ttone", description="t-tone graph coloring toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("graph", nargs="?", help="edge-list file")
        p.add_argument("--gen", help="generate instead: name[:p1,p2] or random:kind:n:param")
        p.add_argument("--seed", type=int, default=0)
        return p

    p = with_input(sub.add_parser("color", help="run a budgeted colorer"))
    p.add_argument("--algorithm", choices=ALGORITHMS, default="2tone-greedy")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_color)

    p = with_input(sub.add_parser("exact", help="exact t-tone chromatic number"))
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--k", type=int, help="decide a single k instead of searching for the minimum")
    p.add_argument("--timeout-secs", type=float, default=600.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = with_input(sub.add_parser("verify", help="check a coloring file against a graph"))
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = with_input(sub.add_parser("gen", help="write a generated graph as an edge list"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("heawood-check", help="certify tau_2(Heawood) = 7")
    p.add_argument("--timeout-secs", type=float, default=900.0)
    p.set_defaults(func=cmd_heawood)

    p = sub.add_parser("claims-check", help="scan all 7-label families on 6 colors")
    p.set_defaults(func=cmd_claims)

    p = sub.add_parser("bounds-suite", help="budget compliance over seeded instances")
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algorithm", choices=SUITE_ALGORITHMS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if getattr(args, "timeout_secs", None) is not None and args.timeout_secs <= 0:
        parser.error("--timeout-secs must be positive")
    try:
        return args.func(args)
    except GraphClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except TimeoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except InternalInvariant as exc:
        print(f"internal error (please report): {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (TToneError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
