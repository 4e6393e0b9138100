"""Named graphs and seeded random families."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .coloring import PartialToneColoring, ToneParams, parse_label
from .errors import Infeasible, TooLarge
from .graph import Graph, build_graph

MAX_VERTICES = 2_000_000


@dataclass(frozen=True)
class LcfSpec:
    shifts: tuple[int, ...]
    repeat: int = 1

    def __post_init__(self):
        if len(self.shifts) * self.repeat < 3:
            raise ValueError("LCF cycle needs at least 3 vertices")


def lcf_graph(spec: LcfSpec) -> Graph:
    """Hamiltonian cycle ``0..n-1`` plus chords ``i -- i + shift``."""
    shifts = spec.shifts * spec.repeat
    n = len(shifts)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + s) % n) for i, s in enumerate(shifts) if s % n]
    return build_graph(n, edges)


def heawood() -> Graph:
    """Heawood graph as LCF [5, -5]^7: 14-cycle, chords from even positions."""
    return lcf_graph(LcfSpec((5, -5), 7))


RING_LABELS = ("14", "25", "36", "47", "51", "62", "73")


def heawood_seven_coloring() -> PartialToneColoring:
    """The 2-tone 7-coloring of the Heawood graph: vertex j gets ``RING_LABELS[j % 7]``."""
    return PartialToneColoring(
        ToneParams(2, 7), {j: parse_label(RING_LABELS[j % 7]) for j in range(14)}
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return complete_bipartite(1, k)


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def empty(n: int) -> Graph:
    return build_graph(n, [])


def prism(n: int = 3) -> Graph:
    """C_n x K_2; the default is the triangular prism."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges)


def complete_ary_tree(arity: int, height: int) -> Graph:
    """Rooted tree, BFS-numbered from root 0, every internal vertex with ``arity`` children."""
    if arity < 1 or height < 0:
        raise ValueError("need arity >= 1 and height >= 0")
    size = height + 1 if arity == 1 else (arity ** (height + 1) - 1) // (arity - 1)
    if size > MAX_VERTICES:
        raise TooLarge(f"complete {arity}-ary tree of height {height} has {size} vertices")
    internal = size - arity**height if arity > 1 else height
    edges = [(p, arity * p + j) for p in range(internal) for j in range(1, arity + 1)]
    return build_graph(size, edges)


NAMED = {
    "heawood": heawood,
    "petersen": petersen,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "path": path,
    "cycle": cycle,
    "empty": empty,
    "prism": prism,
    "complete_ary_tree": complete_ary_tree,
}


def named(name: str, *params: int) -> Graph:
    """``named("complete", 4)``, ``named("petersen")`` and so on."""
    try:
        ctor = NAMED[name]
    except KeyError:
        raise ValueError(f"unknown graph {name!r}; choose from {sorted(NAMED)}") from None
    return ctor(*params)


def _relabel(n: int, edges: Sequence[tuple[int, int]], rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def _max_degree_graph(n, r, rng, p):
    deg = [0] * n
    edges = []
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if deg[u] < r and deg[v] < r and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return build_graph(n, edges)


def _cubic(n, rng, attempts=10_000):
    if n < 4 or n % 2:
        raise Infeasible(f"cubic graphs need even n >= 4, got {n}")
    for _ in range(attempts):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = {tuple(sorted(stubs[i : i + 2])) for i in range(0, len(stubs), 2)}
        if len(pairs) == len(stubs) // 2 and all(u != v for u, v in pairs):
            return build_graph(n, sorted(pairs))
    raise Infeasible(f"configuration model kept producing multigraphs for n={n}")


def _tree(n, cap, rng):
    if n < 1:
        raise Infeasible("a tree needs at least one vertex")
    if cap < 1 and n > 1 or cap == 1 and n > 2:
        raise Infeasible(f"no tree on {n} vertices has maximum degree {cap}")
    deg = [0] * n
    edges = []
    start = 1
    if n > cap:
        # force one vertex of degree exactly cap
        edges = [(0, j) for j in range(1, cap + 1)]
        deg[0] = cap
        for j in range(1, cap + 1):
            deg[j] = 1
        start = cap + 1
    open_ = [v for v in range(start) if deg[v] < cap]
    for v in range(start, n):
        i = rng.randrange(len(open_))
        u = open_[i]
        edges.append((u, v))
        deg[u] += 1
        deg[v] = 1
        if deg[u] >= cap:
            open_[i] = open_[-1]
            open_.pop()
        if cap > 1:
            open_.append(v)
    return _relabel(n, edges, rng)


def _k_degenerate(n, k, rng, max_degree=None):
    deg = [0] * n
    edges = []
    for v in range(1, n):
        pool = [u for u in range(v) if max_degree is None or deg[u] < max_degree]
        room = k if max_degree is None else min(k, max_degree)
        for u in rng.sample(pool, min(room, len(pool))):
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return _relabel(n, edges, rng)


def _bipartite(n, r, rng, p):
    a = n // 2
    deg = [0] * n
    edges = []
    pairs = [(u, v) for u in range(a) for v in range(a, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if deg[u] < r and deg[v] < r and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return _relabel(n, edges, rng)


def _chordal(n, r, rng):
    # each new vertex joins a subset of an existing clique, so it is simplicial
    deg = [0] * n
    edges = []
    cliques: list[list[int]] = [[0]]
    for v in range(1, n):
        q = rng.choice(cliques)
        room = [u for u in q if deg[u] < r]
        if not room:
            cliques.append([v])
            continue
        size = rng.randint(1, min(len(room), r))
        nbrs = rng.sample(room, size)
        for u in nbrs:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        cliques.append(nbrs + [v])
    return _relabel(n, edges, rng)


RANDOM_KINDS = ("max_degree_r", "cubic", "tree_with_max_degree", "k_degenerate", "bipartite", "chordal", "gnp")


def random_family(kind: str, n: int, param: float, seed: int, **opts) -> Graph:
    """Seeded random graph from one of :data:`RANDOM_KINDS`.

    ``param`` means the maximum degree for ``max_degree_r``, ``bipartite``,
    ``chordal`` and ``tree_with_max_degree``, the degeneracy bound for
    ``k_degenerate`` (``max_degree=`` optionally caps degrees too) and the edge
    probability for ``gnp``; it is ignored for ``cubic``.  Edge density for the
    capped families is set with ``p=`` (default 0.5).
    """
    rng = random.Random(seed)
    if n < 0:
        raise Infeasible("negative vertex count")
    if kind == "max_degree_r":
        return _max_degree_graph(n, int(param), rng, opts.get("p", 0.5))
    if kind == "cubic":
        return _cubic(n, rng)
    if kind == "tree_with_max_degree":
        return _tree(n, int(param), rng)
    if kind == "k_degenerate":
        return _k_degenerate(n, int(param), rng, opts.get("max_degree"))
    if kind == "bipartite":
        return _bipartite(n, int(param), rng, opts.get("p", 0.5))
    if kind == "chordal":
        return _chordal(n, int(param), rng)
    if kind == "gnp":
        pairs = itertools.combinations(range(n), 2)
        return build_graph(n, [e for e in pairs if rng.random() < param])
    raise ValueError(f"unknown random kind {kind!r}; choose from {RANDOM_KINDS}")
