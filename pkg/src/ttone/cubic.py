"""2-tone 8-colorings of graphs with maximum degree at most 3.

The algorithm follows the inductive argument that such graphs are 2-tone
8-colorable, run as a structural recursion on each connected component:

* a vertex of degree <= 2 exists: color outward-in, farthest vertices first,
  so every vertex still has an uncolored neighbour and an uncolored
  second-neighbour when its turn comes;
* K4: four disjoint pairs;
* an induced K_{2,3}: color the rest, then give the three degree-2 vertices
  labels sharing one color that is absent from their outside neighbours;
* otherwise: delete a shortest cycle, join the off-cycle neighbours of its
  ends so they receive disjoint labels, color that smaller graph and walk the
  colors back around the cycle.

The cycle walk keeps the full set of valid labels for the current vertex and
commits to a label for the previous one only if it leaves at least three
choices (one, for the final vertex).  The argument guarantees a good choice
exists but does not say which, so when the walk gets stuck an exhaustive
search over the cycle labels takes over.  Such fallbacks are counted.
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import Sequence

from .coloring import (
    Label,
    PartialToneColoring,
    ToneParams,
    colors_mask,
    constraints_at,
    label_colors,
    make_label,
    verify_coloring,
)
from .errors import BadAnchor, DegreeTooHigh, InternalInvariant
from .graph import (
    Graph,
    build_graph,
    components,
    distances_from,
    find_induced_k23,
    induced_subgraph,
    max_degree,
    shortest_cycle,
)

log = logging.getLogger(__name__)

K = 8
COLORS = range(1, K + 1)


class CycleCase(enum.Enum):
    IDENTICAL_ENDS = "identical-ends"  # 12, 12, 34
    DISJOINT_TRIPLE = "disjoint-triple"  # 12, 34, 56
    OVERLAPPING = "overlapping"  # 12, 13, L with 1 not in L


@dataclass
class TraceStep:
    depth: int
    kind: str
    n: int
    detail: dict = field(default_factory=dict)

    def __str__(self) -> str:
        extra = " ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{'  ' * self.depth}{self.kind} n={self.n} {extra}".rstrip()


@dataclass
class CubicResult:
    coloring: PartialToneColoring
    trace: list[TraceStep]

    @property
    def fallbacks(self) -> int:
        return sum(1 for s in self.trace if s.detail.get("fallback"))

    @property
    def cycle_steps(self) -> int:
        return sum(1 for s in self.trace if s.kind == "cycle")

    def trace_text(self) -> str:
        return "\n".join(map(str, self.trace))


def _least(g: Graph, labels: dict[int, Label], v: int, within: Sequence[Label] | None = None):
    cons = constraints_at(g, labels, v, 2, COLORS)
    if within is None:
        return next(cons.labels(2), None)
    free = colors_mask(cons.free)
    for L in within:
        if not L & ~free and cons.allows(L):
            return L
    return None


def _valid(g: Graph, labels: dict[int, Label], v: int, within: Sequence[Label] | None = None) -> list[Label]:
    cons = constraints_at(g, labels, v, 2, COLORS)
    if within is None:
        return list(cons.labels(2))
    free = colors_mask(cons.free)
    return [L for L in within if not L & ~free and cons.allows(L)]


# ---------------------------------------------------------------------------
# low-degree anchor


def _low_degree_labels(g: Graph, v: int, labels: dict[int, Label]) -> dict[int, Label]:
    dist = distances_from(g, v)
    for w in sorted(dist, key=lambda w: (-dist[w], w)):
        label = _least(g, labels, w)
        if label is None:
            raise InternalInvariant(f"no valid label at vertex {w} (anchor {v})")
        labels[w] = label
    return labels


def color_from_low_degree(g: Graph, v: int) -> PartialToneColoring:
    """Color the component of ``v`` farthest-first with 8 colors.

    Needs ``deg(v) <= 2`` and maximum degree at most 3.  Vertices outside
    ``v``'s component are left uncolored.
    """
    if not 0 <= v < g.n or g.degree(v) > 2 or max_degree(g) > 3:
        raise BadAnchor(f"vertex {v} is not a valid anchor (needs degree <= 2 and max degree <= 3)")
    return PartialToneColoring(ToneParams(2, K), _low_degree_labels(g, v, {}))


# ---------------------------------------------------------------------------
# induced K_{2,3}


def _resolve_k23_labels(g: Graph, sub: Sequence[int], labels: dict[int, Label]) -> tuple[dict[int, Label], int]:
    x1, x2, *ys = sub
    outside = []
    for y in ys:
        outside += [u for u in g.adjacency[y] if u not in (x1, x2)]
    used = 0
    for u in outside:
        used |= labels.get(u, 0)
    shared = next((c for c in COLORS if not used >> c & 1), None)
    if shared is None:
        raise InternalInvariant(f"every color appears around K23 {tuple(sub)}")
    with_shared = [make_label(*sorted((shared, c))) for c in COLORS if c != shared]
    for y in ys:
        label = _least(g, labels, y, with_shared)
        if label is None:
            raise InternalInvariant(f"no label containing {shared} fits at {y}")
        labels[y] = label
    for x in (x1, x2):
        label = _least(g, labels, x)
        if label is None:
            raise InternalInvariant(f"no valid label at K23 vertex {x}")
        labels[x] = label
    return labels, shared


def resolve_k23(g: Graph, sub: Sequence[int], outer: PartialToneColoring) -> PartialToneColoring:
    """Color the five vertices ``(x1, x2, y1, y2, y3)`` of an induced K_{2,3}.

    ``outer`` must color everything else.  The y's all receive the least color
    missing from their outside neighbours plus a partner, the x's follow.
    """
    left = [v for v in range(g.n) if v not in outer]
    if sorted(left) != sorted(sub):
        raise ValueError("outer coloring must leave exactly the K23 vertices uncolored")
    labels, _ = _resolve_k23_labels(g, sub, dict(outer.labels))
    return PartialToneColoring(ToneParams(2, K), labels)


# ---------------------------------------------------------------------------
# cycle reduction


@dataclass
class CycleReduction:
    graph: Graph
    keep: list[int]  # reduced-graph id -> id in the original graph
    cycle: list[int]  # oriented so the required distinctness holds
    outside: list[int]  # off-cycle neighbour of each cycle vertex
    added: list[tuple[int, int]]  # edges added, in original ids


def _outside_neighbors(g: Graph, cycle: Sequence[int]) -> list[int]:
    on = set(cycle)
    out = []
    for v in cycle:
        off = [w for w in g.adjacency[v] if w not in on]
        if len(off) != 1 or g.degree(v) != 3:
            raise ValueError(f"cycle vertex {v} must have degree 3 and one neighbour off the cycle")
        out.append(off[0])
    return out


def _orientations(cycle: Sequence[int]):
    n = len(cycle)
    for direction in (list(cycle), list(reversed(cycle))):
        for r in range(n):
            yield direction[r:] + direction[:r]


def reduce_cycle(g: Graph, cycle: Sequence[int]) -> CycleReduction:
    """Delete ``cycle`` and add the joining edges between outside neighbours.

    The cycle is rotated (or reflected) so that the outside neighbours of its
    second-to-last and first vertices differ, and for cycles longer than a
    triangle also those of its last and second vertices.  The edges
    ``u[-2] u[0]`` and (length >= 4) ``u[-1] u[1]`` are then added if missing.
    """
    length = len(cycle)
    if length < 3:
        raise ValueError("cycle needs at least 3 vertices")
    for oriented in _orientations(cycle):
        us = _outside_neighbors(g, oriented)
        if us[-2] == us[0]:
            continue
        if length >= 4 and us[-1] == us[1]:
            continue
        break
    else:
        raise InternalInvariant(f"no orientation of cycle {list(cycle)} separates the outside neighbours")
    joins = [(us[-2], us[0])]
    if length >= 4:
        joins.append((us[-1], us[1]))
    on = set(oriented)
    keep = [v for v in range(g.n) if v not in on]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges() if a not in on and b not in on]
    added = []
    for a, b in joins:
        if not g.has_edge(a, b):
            added.append((a, b))
            edges.append((index[a], index[b]))
    reduced = build_graph(len(keep), edges)
    if reduced.m != len(edges) or max_degree(reduced) > 3:
        raise InternalInvariant("cycle reduction produced a multigraph or a vertex of degree > 3")
    return CycleReduction(reduced, keep, list(oriented), us, added)


# ---------------------------------------------------------------------------
# extension around the cycle


@dataclass
class CycleOutcome:
    case: CycleCase
    anchors: tuple[Label, Label, Label]
    reflected: bool
    fallback: bool
    first_options: int


def _renaming(case: CycleCase, a: Label, b: Label, c: Label) -> dict[int, int]:
    """Map actual colors to the canonical ones of the case pattern."""
    if case is CycleCase.IDENTICAL_ENDS:
        order = list(label_colors(a)) + list(label_colors(c))
    elif case is CycleCase.DISJOINT_TRIPLE:
        order = list(label_colors(a)) + list(label_colors(b)) + list(label_colors(c))
    else:
        (x,) = label_colors(a & b)
        (y,) = label_colors(a & ~b)
        (z,) = label_colors(b & ~a)
        order = [x, y, z] + [col for col in label_colors(c) if col != z]
    order += [col for col in COLORS if col not in order]
    return {actual: canon for canon, actual in enumerate(order, start=1)}


def _first_family(case: CycleCase, triangle: bool) -> list[tuple[int, int]]:
    pairs = list(itertools.combinations(COLORS, 2))
    if case is CycleCase.IDENTICAL_ENDS:
        return [p for p in pairs if 1 in p or 2 in p]
    if case is CycleCase.DISJOINT_TRIPLE:
        return [(1, 3), (2, 3), (3, 7), (3, 8)] if triangle else [(1, 3), (1, 4), (2, 3), (2, 4)]
    return [p for p in pairs if 1 in p or 3 in p]


def _reflect(cycle: list[int]) -> list[int]:
    # keep the last vertex, reverse the rest
    return list(reversed(cycle[:-1])) + [cycle[-1]]


def _classify(g, labels, cycle):
    us = _outside_neighbors(g, cycle)
    a, b, c = labels[us[-2]], labels[us[-1]], labels[us[0]]
    if b == a or b == c:
        return CycleCase.IDENTICAL_ENDS, b == c and b != a
    if not b & a and not b & c:
        return CycleCase.DISJOINT_TRIPLE, False
    return CycleCase.OVERLAPPING, not b & a


def _cycle_backtrack(g: Graph, labels: dict[int, Label], cycle: Sequence[int]) -> bool:
    def go(i: int) -> bool:
        if i == len(cycle):
            return True
        v = cycle[i]
        for L in _valid(g, labels, v):
            labels[v] = L
            if go(i + 1):
                return True
            del labels[v]
        return False

    return go(0)


def _walk(g, labels, cycle, first, second_family):
    """Greedy walk around the cycle; returns False if some step lacks enough choices."""
    length = len(cycle)
    options = _valid(g, labels, cycle[0], first)
    if not options:
        return False
    for i in range(1, length):
        within = second_family if i == 1 and second_family is not None else None
        need = 1 if i == length - 1 or within is not None else 3
        prev = cycle[i - 1]
        for choice in options:
            labels[prev] = choice
            nxt = _valid(g, labels, cycle[i], within)
            if len(nxt) >= need:
                options = nxt
                break
        else:
            for v in cycle[:i]:
                labels.pop(v, None)
            return False
    labels[cycle[-1]] = options[0]
    return True


def _extend_labels(g: Graph, labels: dict[int, Label], cycle: list[int]) -> CycleOutcome:
    us = _outside_neighbors(g, cycle)
    if labels[us[-2]] & labels[us[0]]:
        raise InternalInvariant("outside neighbours of the cycle ends share a color")
    case, reflect = _classify(g, labels, cycle)
    if reflect:
        cycle = _reflect(cycle)
        us = _outside_neighbors(g, cycle)
    a, b, c = labels[us[-2]], labels[us[-1]], labels[us[0]]
    rename = _renaming(case, a, b, c)
    back = {canon: actual for actual, canon in rename.items()}
    triangle = len(cycle) == 3

    def actual(pairs):
        return [make_label(*sorted((back[p], back[q]))) for p, q in pairs]

    first = actual(_first_family(case, triangle))
    second = None
    if case is CycleCase.DISJOINT_TRIPLE and triangle:
        second = actual([(4, 5), (4, 6), (4, 7), (4, 8)])
    first_options = len(_valid(g, labels, cycle[0], first))
    fallback = False
    if not _walk(g, labels, cycle, first, second):
        fallback = True
        log.info("cycle walk stuck on %s (%s); falling back to search", cycle, case.value)
        if not _cycle_backtrack(g, labels, cycle):
            raise InternalInvariant(f"no 8-coloring extends around cycle {cycle}")
    return CycleOutcome(case, (a, b, c), reflect, fallback, first_options)


def extend_around_cycle(
    g: Graph, outer: PartialToneColoring, cycle: Sequence[int]
) -> tuple[PartialToneColoring, CycleOutcome]:
    """Extend ``outer`` (everything colored except ``cycle``) to the cycle.

    ``cycle`` should be oriented as :func:`reduce_cycle` returns it.
    """
    cycle = list(cycle)
    left = [v for v in range(g.n) if v not in outer]
    if sorted(left) != sorted(cycle):
        raise ValueError("outer coloring must leave exactly the cycle uncolored")
    labels = dict(outer.labels)
    outcome = _extend_labels(g, labels, cycle)
    return PartialToneColoring(ToneParams(2, K), labels), outcome


# ---------------------------------------------------------------------------
# driver


def _lift(sub_labels: dict[int, Label], keep: Sequence[int]) -> dict[int, Label]:
    return {keep[v]: L for v, L in sub_labels.items()}


def _solve(g: Graph, depth: int, trace: list[TraceStep]) -> dict[int, Label]:
    comps = components(g)
    if len(comps) == 1:
        return _solve_connected(g, depth, trace)
    labels: dict[int, Label] = {}
    for comp in comps:
        sub, keep = induced_subgraph(g, comp)
        labels.update(_lift(_solve_connected(sub, depth, trace), keep))
    return labels


def _solve_connected(g: Graph, depth: int, trace: list[TraceStep]) -> dict[int, Label]:
    if g.n == 0:
        return {}
    low = [v for v in range(g.n) if g.degree(v) <= 2]
    if low:
        trace.append(TraceStep(depth, "low-degree", g.n, {"anchor": low[0]}))
        return _low_degree_labels(g, low[0], {})
    if g.n == 4:
        trace.append(TraceStep(depth, "k4", 4))
        return {v: make_label(2 * v + 1, 2 * v + 2) for v in range(4)}
    sub = find_induced_k23(g)
    if sub is not None:
        trace.append(TraceStep(depth, "k23", g.n, {"vertices": sub}))
        rest = [v for v in range(g.n) if v not in sub]
        smaller, keep = induced_subgraph(g, rest)
        labels = _lift(_solve(smaller, depth + 1, trace), keep)
        labels, shared = _resolve_k23_labels(g, sub, labels)
        trace[-1].detail["shared"] = shared
        return labels
    cycle = shortest_cycle(g)
    if cycle is None:
        raise InternalInvariant("3-regular graph without a cycle")
    red = reduce_cycle(g, cycle)
    step = TraceStep(depth, "cycle", g.n, {"length": len(cycle), "added": len(red.added)})
    trace.append(step)
    labels = _lift(_solve(red.graph, depth + 1, trace), red.keep)
    outcome = _extend_labels(g, labels, red.cycle)
    step.detail.update(case=outcome.case.value, fallback=outcome.fallback)
    return labels


def color_cubic_8(g: Graph) -> CubicResult:
    """2-tone 8-coloring of a graph with maximum degree <= 3, with a reduction trace."""
    if max_degree(g) > 3:
        raise DegreeTooHigh(f"maximum degree {max_degree(g)} exceeds 3")
    trace: list[TraceStep] = []
    labels = _solve(g, 0, trace)
    coloring = PartialToneColoring(ToneParams(2, K), labels)
    bad = verify_coloring(g, coloring)
    if bad or len(labels) != g.n:
        raise InternalInvariant(f"cubic colorer produced an invalid coloring: {bad[:3]}")
    return CubicResult(coloring, trace)
