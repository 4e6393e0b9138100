"""Budgeted greedy colorers and the closed-form bounds they realise.

Every colorer fixes a color count ``k`` from a known upper bound on the
t-tone chromatic number, walks the vertices in a prescribed order and gives
each the lexicographically least label still allowed.  Each bound's proof
guarantees that some label is always left; running out is reported as
:class:`InternalInvariant`.

All budgets use integer arithmetic only.  Irrational ceilings such as
``ceil(sqrt(2) * D)`` are found as the least ``m`` with ``m**2 >= 2 * D**2``.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .coloring import (
    Label,
    PartialToneColoring,
    ToneParams,
    constraints_at,
    restrict_tones,
    verify_coloring,
)
from .errors import InternalInvariant, NotATree, NotBipartite, NotChordal
from .graph import (
    Graph,
    VertexOrdering,
    bipartition,
    components,
    degeneracy_ordering,
    is_forest,
    max_degree,
    perfect_elimination_ordering,
)


def ceil_root(x: int, t: int = 2) -> int:
    """Least integer ``m >= 0`` with ``m**t >= x``."""
    if x <= 0:
        return 0
    if t == 1:
        return x
    if t == 2:
        return math.isqrt(x - 1) + 1
    lo, hi = 0, 1
    while hi**t < x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**t >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def budget_2tone_general(delta: int) -> int:
    """ceil((2 + sqrt 2) * delta), i.e. ``2*delta + ceil(sqrt(2) * delta)``."""
    return 2 * delta + ceil_root(2 * delta * delta)


def budget_2tone_bipartite(delta: int) -> int:
    """Two palettes of ``ceil(sqrt(2) * delta)`` colors each."""
    return 2 * ceil_root(2 * delta * delta)


def _least_m_2m2_ge(x: int) -> int:
    # least m with 2 m^2 >= x
    return ceil_root((x + 1) // 2)


def budget_2tone_chordal(delta: int) -> int:
    """ceil((1 + sqrt(6)/2) * delta) + 1."""
    return delta + _least_m_2m2_ge(3 * delta * delta) + 1


def budget_ttone_general(delta: int, t: int) -> int:
    return (t * t + t) * delta


def budget_ttone_degenerate(k: int, t: int, r: int) -> int:
    """``k*t + ceil(k * t**2 * r**(1 - 1/t))``."""
    return k * t + ceil_root((k * t * t) ** t * r ** (t - 1), t)


def tree_tau2(delta: int) -> int:
    """Exact 2-tone chromatic number of a tree with maximum degree ``delta``:
    ``ceil((5 + sqrt(1 + 8*delta)) / 2)``."""
    if delta < 1:
        raise ValueError("tree formula needs maximum degree >= 1")
    x = 1 + 8 * delta
    q = math.isqrt(x)
    a = 5 + q
    if q * q == x:
        return (a + 1) // 2
    return a // 2 + 1


@dataclass(frozen=True)
class AryTreeBound:
    value: int
    estimate: Fraction
    vertices: int
    height: int


def ary_tree_lower_bound(r: int, t: int) -> AryTreeBound:
    """Colors forced on the complete ``(r-1)``-ary tree of height ``ceil(lg t)``.

    Every pair of its vertices is within distance ``2h`` (``h`` the height),
    so the i-th vertex examined brings at least ``t - 2*h*i`` new colors.
    ``estimate`` is the coarser closed form ``t**2 / (8h)``.
    """
    if r < 3 or t < 2:
        raise ValueError("need r >= 3 and t >= 2")
    h = (t - 1).bit_length()
    arity = r - 1
    vertices = (arity ** (h + 1) - 1) // (arity - 1)
    value = 0
    for i in range(vertices):
        term = t - 2 * h * i
        if term <= 0:
            break
        value += term
    return AryTreeBound(value, Fraction(t * t, 8 * h), vertices, h)


@dataclass
class BoundReport:
    algorithm: str
    budget: int
    used: int
    valid: bool
    order: VertexOrdering
    elapsed: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "algorithm": self.algorithm,
            "budget": self.budget,
            "used": self.used,
            "valid": self.valid,
            **self.extra,
        }


def _greedy(
    g: Graph,
    order: Iterable[int],
    t: int,
    k: int,
    palette_of=None,
    labels: dict[int, Label] | None = None,
    name: str = "greedy",
) -> dict[int, Label]:
    labels = {} if labels is None else labels
    full = range(1, k + 1)
    for v in order:
        palette = full if palette_of is None else palette_of(v)
        cons = constraints_at(g, labels, v, t, palette)
        label = next(cons.labels(t), None)
        if label is None:
            raise InternalInvariant(f"{name}: no valid label left for vertex {v} with k={k}")
        labels[v] = label
    return labels


def _finish(name, g, t, k, labels, order, started, **extra):
    coloring = PartialToneColoring(ToneParams(t, k), labels)
    used = len(coloring.colors_used())
    report = BoundReport(
        algorithm=name,
        budget=k,
        used=used,
        valid=not verify_coloring(g, coloring) and len(labels) == g.n,
        order=order,
        elapsed=time.perf_counter() - started,
        extra=extra,
    )
    return coloring, report


def color_2tone_greedy(g: Graph) -> tuple[PartialToneColoring, BoundReport]:
    """Greedy 2-tone coloring in id order with ``ceil((2 + sqrt 2) * D)`` colors."""
    started = time.perf_counter()
    k = max(budget_2tone_general(max_degree(g)), 2)
    order = VertexOrdering.identity(g.n)
    labels = _greedy(g, order.order, 2, k, name="2tone-greedy")
    return _finish("2tone-greedy", g, 2, k, labels, order, started)


def color_2tone_bipartite(g: Graph) -> tuple[PartialToneColoring, BoundReport]:
    """Each side of the bipartition draws from its own palette of ``ceil(sqrt(2) * D)`` colors."""
    started = time.perf_counter()
    sides = bipartition(g)
    if sides is None:
        raise NotBipartite("graph has an odd cycle")
    a, b = sides
    p = max(ceil_root(2 * max_degree(g) ** 2), 2)
    pal_a, pal_b = range(1, p + 1), range(p + 1, 2 * p + 1)
    side_a = set(a)
    order = VertexOrdering.from_order(a + b)
    labels = _greedy(
        g, order.order, 2, 2 * p,
        palette_of=lambda v: pal_a if v in side_a else pal_b,
        name="2tone-bipartite",
    )
    return _finish("2tone-bipartite", g, 2, 2 * p, labels, order, started, palette_size=p)


def color_2tone_chordal(g: Graph) -> tuple[PartialToneColoring, BoundReport]:
    """Colors along the reverse of a simplicial elimination ordering."""
    started = time.perf_counter()
    peo = perfect_elimination_ordering(g)
    if peo is None:
        raise NotChordal("graph has no simplicial elimination ordering")
    k = max(budget_2tone_chordal(max_degree(g)), 2)
    order = peo.reversed()
    labels = _greedy(g, order.order, 2, k, name="2tone-chordal")
    return _finish("2tone-chordal", g, 2, k, labels, order, started)


def color_ttone_greedy(g: Graph, t: int) -> tuple[PartialToneColoring, BoundReport]:
    """Greedy t-tone coloring in id order with ``(t**2 + t) * D`` colors."""
    if t < 1:
        raise ValueError("t must be at least 1")
    started = time.perf_counter()
    k = max(budget_ttone_general(max_degree(g), t), t)
    order = VertexOrdering.identity(g.n)
    labels = _greedy(g, order.order, t, k, name="ttone-greedy")
    return _finish("ttone-greedy", g, t, k, labels, order, started)


def color_ttone_degenerate(g: Graph, t: int) -> tuple[PartialToneColoring, BoundReport]:
    """Greedy t-tone coloring along the smallest-last ordering.

    The budget is ``k*t + ceil(k * t**2 * D**(1 - 1/t))`` where ``k`` is the
    degeneracy, raised to 2 when smaller.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    started = time.perf_counter()
    degeneracy, order = degeneracy_ordering(g)
    kd = max(degeneracy, 2)
    budget = max(budget_ttone_degenerate(kd, t, max_degree(g)), t)
    labels = _greedy(g, order.order, t, budget, name="ttone-degenerate")
    return _finish(
        "ttone-degenerate", g, t, budget, labels, order, started,
        degeneracy=degeneracy,
    )


def best_ttone_budget(g: Graph, t: int) -> tuple[str, int]:
    """The smaller of the max-degree and degeneracy budgets for ``g``."""
    delta = max_degree(g)
    general = max(budget_ttone_general(delta, t), t)
    kd = max(degeneracy_ordering(g)[0], 2)
    degenerate = max(budget_ttone_degenerate(kd, t, delta), t)
    if degenerate < general:
        return "ttone-degenerate", degenerate
    return "ttone-greedy", general


def color_ttone_best(g: Graph, t: int) -> tuple[PartialToneColoring, BoundReport]:
    name, _ = best_ttone_budget(g, t)
    if name == "ttone-degenerate":
        return color_ttone_degenerate(g, t)
    return color_ttone_greedy(g, t)


def tree_levels(g: Graph) -> list[int]:
    """BFS depth of every vertex, each component rooted at its smallest vertex."""
    level = [-1] * g.n
    for comp in components(g):
        root = comp[0]
        level[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if level[w] < 0:
                    level[w] = level[u] + 1
                    queue.append(w)
    return level


def _color_levels(g, level, tones, s):
    period = tones + 1
    by_level: dict[int, set[int]] = {}
    for v in range(g.n):
        by_level.setdefault(level[v], set()).add(v)
    labels: dict[int, Label] = {}
    for lv in sorted(by_level):
        base = (lv % period) * s
        palette = range(base + 1, base + s + 1)
        same = by_level[lv]
        for v in sorted(same):
            cons = constraints_at(g, labels, v, tones, palette, among=same)
            label = next(cons.labels(tones), None)
            if label is None:
                return None
            labels[v] = label
    return labels


def color_tree_ttone(g: Graph, t: int) -> tuple[PartialToneColoring, BoundReport]:
    """t-tone coloring of a forest with ``t + 1`` level palettes.

    Level ``i`` (BFS depth from each component's smallest vertex) draws only
    from palette ``i mod (t + 1)``, so vertices on different levels within
    distance ``t`` get disjoint labels and each level can be colored on its
    own.  Odd ``t`` is colored with ``t + 1`` tones and each label then loses
    its largest color.  The palette size starts at ``t + ceil(sqrt D)`` and
    grows by ``ceil(sqrt D)`` until every level succeeds; the report's
    ``palette_size`` says what sufficed and ``budget`` is ``(t + 1) * s``.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if not is_forest(g):
        raise NotATree("graph contains a cycle")
    started = time.perf_counter()
    tones = t if t % 2 == 0 else t + 1
    delta = max_degree(g)
    step = max(ceil_root(delta), 1)
    level = tree_levels(g)
    s = tones + step
    attempts = 1
    while (labels := _color_levels(g, level, tones, s)) is None:
        s += step
        attempts += 1
    k = (tones + 1) * s
    coloring = PartialToneColoring(ToneParams(tones, k), labels)
    if tones != t:
        coloring = restrict_tones(coloring, t)
    order = VertexOrdering.from_order(sorted(range(g.n), key=lambda v: (level[v], v)))
    _, report = _finish(
        "tree", g, t, k, dict(coloring.labels), order, started,
        palette_size=s, tones_used=tones, attempts=attempts,
    )
    return coloring, report


COLORERS = {
    "2tone-greedy": lambda g, t: color_2tone_greedy(g),
    "2tone-bipartite": lambda g, t: color_2tone_bipartite(g),
    "2tone-chordal": lambda g, t: color_2tone_chordal(g),
    "ttone-greedy": color_ttone_greedy,
    "ttone-degenerate": color_ttone_degenerate,
    "tree": color_tree_ttone,
}
