"""Edge-list graphs and JSON colorings.

Edge-list format: ``#`` starts a comment line, blank lines are skipped, the
first remaining line is ``n m`` and exactly ``m`` lines ``u v`` (0-based)
follow.
"""

from __future__ import annotations

import json
from typing import Any

from .coloring import PartialToneColoring, ToneParams, label_colors, make_label
from .errors import InvalidVertex, ParseError
from .graph import Graph, build_graph


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"not an integer in {line!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _ints(line, lineno, 2)
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in header", lineno)
            continue
        u, v = _ints(line, lineno, 2)
        for x in (u, v):
            if not 0 <= x < header[0]:
                raise InvalidVertex(f"line {lineno}: vertex {x} out of range 0..{header[0] - 1}")
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def coloring_payload(
    c: PartialToneColoring,
    *,
    algorithm: str | None = None,
    used: int | None = None,
    valid: bool | None = None,
    stats: dict[str, Any] | None = None,
) -> dict[str, Any]:
    return {
        "t": c.t,
        "k": c.k,
        "labels": {str(v): list(label_colors(L)) for v, L in sorted(c.labels.items())},
        "algorithm": algorithm,
        "used": len(c.colors_used()) if used is None else used,
        "valid": valid,
        "stats": stats or {},
    }


def write_coloring_json(c: PartialToneColoring, report=None, **kw) -> str:
    """Serialise ``c`` with sorted keys.

    ``report`` may be a :class:`~ttone.bounds.BoundReport` or
    :class:`~ttone.exact.SearchStats`.  Wall-clock times are left out so the
    output depends only on the input.
    """
    if report is not None and hasattr(report, "algorithm"):
        kw.setdefault("algorithm", report.algorithm)
        kw.setdefault("used", report.used)
        kw.setdefault("valid", report.valid)
        kw.setdefault("stats", {k: v for k, v in report.as_dict().items()
                                if k not in ("algorithm", "used", "valid")})
    elif report is not None:
        kw.setdefault("stats", {"nodes": report.nodes, "prunes": dict(report.prunes)})
    return json.dumps(coloring_payload(c, **kw), sort_keys=True, indent=1) + "\n"


def read_coloring_json(text: str) -> PartialToneColoring:
    try:
        data = json.loads(text)
        t, k = int(data["t"]), int(data["k"])
        labels = {int(v): make_label(*cs) for v, cs in data["labels"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad coloring file: {exc}") from None
    return PartialToneColoring(ToneParams(t, k), labels)
