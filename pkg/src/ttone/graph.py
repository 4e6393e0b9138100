"""Simple undirected graphs and the structural routines the colorers need.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable once
built; every function here is pure.  Ties are always broken toward the lowest
vertex id so results are reproducible.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidEdge, InvalidVertex


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        # adjacency lists are short in every use here; bisect is not worth it
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_order(cls, order: Iterable[int]) -> "VertexOrdering":
        order = tuple(order)
        position = [-1] * len(order)
        for i, v in enumerate(order):
            position[v] = i
        if sorted(order) != list(range(len(order))):
            raise InvalidVertex("ordering is not a permutation of 0..n-1")
        return cls(order, tuple(position))

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(n)), tuple(range(n)))

    def __len__(self) -> int:
        return len(self.order)

    def reversed(self) -> "VertexOrdering":
        return VertexOrdering.from_order(reversed(self.order))


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on ``0..n-1``.

    Duplicate edges are collapsed.  Self-loops raise :class:`InvalidEdge` and
    endpoints outside ``0..n-1`` raise :class:`InvalidVertex`.
    """
    if n < 0:
        raise InvalidVertex(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidVertex(f"vertex {x} out of range 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled to ``0..len-1``.

    Returns the subgraph and the list mapping new ids back to ids in ``g``.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u in keep for v in g.adjacency[u] if v in index and u < v]
    return build_graph(len(keep), edges), keep


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def distances_from(g: Graph, v: int, cap: int | None = None) -> dict[int, int]:
    """BFS distances from ``v``; vertices farther than ``cap`` are omitted."""
    if not 0 <= v < g.n:
        raise InvalidVertex(f"vertex {v} out of range")
    dist = {v: 0}
    frontier = [v]
    d = 0
    while frontier and (cap is None or d < cap):
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def degeneracy_ordering(g: Graph) -> tuple[int, VertexOrdering]:
    """Smallest-last ordering and the degeneracy it certifies.

    A vertex of minimum remaining degree (lowest id on ties) is deleted
    repeatedly and prepended to the ordering, so every vertex has at most
    ``k`` neighbours earlier in the result.
    """
    deg = g.degrees()
    removed = [False] * g.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    deleted: list[int] = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        deleted.append(v)
        k = max(k, d)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    deleted.reverse()
    return k, VertexOrdering.from_order(deleted)


def count_earlier_at_distance(g: Graph, ordering: VertexOrdering, v: int, d: int) -> int:
    """Number of vertices before ``v`` in ``ordering`` at distance exactly ``d``."""
    if d < 1:
        raise ValueError("distance must be at least 1")
    pos = ordering.position
    pv = pos[v]
    return sum(1 for u, du in distances_from(g, v, d).items() if du == d and pos[u] < pv)


def _mcs_order(g: Graph) -> list[int]:
    # maximum cardinality search; visit order reversed is a PEO iff chordal
    weight = [0] * g.n
    numbered = [False] * g.n
    heap = [(0, v) for v in range(g.n)]
    heapq.heapify(heap)
    visit = []
    while heap:
        negw, v = heapq.heappop(heap)
        if numbered[v] or -negw != weight[v]:
            continue
        numbered[v] = True
        visit.append(v)
        for w in g.adjacency[v]:
            if not numbered[w]:
                weight[w] += 1
                heapq.heappush(heap, (-weight[w], w))
    return visit


def is_perfect_elimination_ordering(g: Graph, ordering: VertexOrdering) -> bool:
    """True when the later neighbours of every vertex form a clique."""
    pos = ordering.position
    for v in ordering.order:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        pn = set(g.adjacency[parent])
        if any(w != parent and w not in pn for w in later):
            return False
    return True


def perfect_elimination_ordering(g: Graph) -> VertexOrdering | None:
    """A simplicial elimination ordering, or ``None`` if ``g`` is not chordal."""
    ordering = VertexOrdering.from_order(reversed(_mcs_order(g)))
    if is_perfect_elimination_ordering(g, ordering):
        return ordering
    return None


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Sides of a proper 2-coloring, or ``None`` when an odd cycle exists.

    The lowest vertex of every component goes to the first side.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    a = [v for v in range(g.n) if side[v] == 0]
    b = [v for v in range(g.n) if side[v] == 1]
    return a, b


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle (``None`` for forests)."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def shortest_cycle(g: Graph) -> list[int] | None:
    """Lexicographically smallest shortest cycle, in traversal order.

    The result starts at its smallest vertex; of the two directions the one
    with the smaller second vertex is returned.
    """
    length = girth(g)
    if length is None:
        return None
    for s in range(g.n):
        home = distances_from(g, s, length)
        path = [s]
        on_path = {s}

        def walk(u: int) -> bool:
            steps_left = length - len(path) + 1
            for w in g.adjacency[u]:
                if steps_left == 1:
                    if w == s:
                        return True
                    continue
                if w <= s or w in on_path or home.get(w, length + 1) > steps_left - 1:
                    continue
                path.append(w)
                on_path.add(w)
                if walk(w):
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if walk(s):
            return path
    return None


def find_induced_k23(g: Graph) -> tuple[int, int, int, int, int] | None:
    """Vertices ``(x1, x2, y1, y2, y3)`` of an induced K_{2,3}, or ``None``.

    ``x1 < x2`` are the two degree-3 vertices of the pattern; they are
    nonadjacent, the ``y`` vertices are pairwise nonadjacent and each is
    adjacent to both ``x``.  The lexicographically first such tuple is returned.
    """
    for x1 in range(g.n):
        seconds = sorted({w for y in g.adjacency[x1] for w in g.adjacency[y] if w > x1})
        n1 = set(g.adjacency[x1])
        for x2 in seconds:
            if x2 in n1:
                continue
            common = sorted(n1.intersection(g.adjacency[x2]))
            if len(common) < 3:
                continue
            for ys in itertools.combinations(common, 3):
                if not any(g.has_edge(a, b) for a, b in itertools.combinations(ys, 2)):
                    return (x1, x2, *ys)
    return None


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))
