"""Exact t-tone colorability by backtracking with forward checking.

Intended for small graphs (n up to about 20, t <= 3, k up to about 12).
Labels are indexed ``0..N-1`` in lexicographic order and every vertex keeps a
bitmask over those indices of labels still compatible with the colored
vertices around it.  Assigning label ``i`` to ``v`` removes, from every
uncolored ``u`` at distance ``d <= t``, the labels meeting label ``i`` in
``d`` or more colors; an emptied domain prunes the branch.

Color symmetry is broken by only letting a label introduce colors above the
current maximum ``m`` if they are exactly ``m+1, m+2, ...``.  Any coloring can
be renamed to satisfy this along any search path, since the renaming touches
colors not yet used, so the search stays complete.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .coloring import (
    Label,
    PartialToneColoring,
    ToneParams,
    all_labels,
    label_colors,
    make_label,
    verify_coloring,
)
from .errors import InternalInvariant
from .generators import heawood, heawood_seven_coloring
from .graph import Graph, distances_from


class Status(enum.Enum):
    FOUND = "found"
    ABSENT = "absent"
    TIMEOUT = "timeout"


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: dict[str, int] = field(default_factory=lambda: {"wipeout": 0, "symmetry": 0})
    elapsed: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        for key, value in other.prunes.items():
            self.prunes[key] = self.prunes.get(key, 0) + value
        self.elapsed += other.elapsed

    def as_dict(self) -> dict:
        return {"nodes": self.nodes, "prunes": dict(self.prunes), "elapsed": round(self.elapsed, 6)}


@dataclass
class SearchResult:
    status: Status
    coloring: PartialToneColoring | None
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class _Timeout(Exception):
    pass


@dataclass(frozen=True)
class _LabelTables:
    labels: tuple[Label, ...]
    # conflicts[d][i]: indices j whose label meets label i in >= d colors
    conflicts: tuple[tuple[int, ...], ...]
    # canonical[m]: indices whose colors above m are exactly m+1..m+j
    canonical: tuple[int, ...]
    top: tuple[int, ...]


@lru_cache(maxsize=128)
def _tables(k: int, t: int) -> _LabelTables:
    labels = all_labels(k, t)
    with_color = [0] * (k + 1)
    for i, L in enumerate(labels):
        for c in label_colors(L):
            with_color[c] |= 1 << i
    conflicts: list[tuple[int, ...]] = [()]
    for d in range(1, t + 1):
        row = []
        for L in labels:
            mask = 0
            for sub in itertools.combinations(label_colors(L), d):
                m = -1
                for c in sub:
                    m &= with_color[c]
                mask |= m
            row.append(mask)
        conflicts.append(tuple(row))
    canonical = []
    for m in range(k + 1):
        mask = 0
        for i, L in enumerate(labels):
            above = [c for c in label_colors(L) if c > m]
            if above == list(range(m + 1, m + 1 + len(above))):
                mask |= 1 << i
        canonical.append(mask)
    top = tuple(label_colors(L)[-1] for L in labels)
    return _LabelTables(labels, tuple(conflicts), tuple(canonical), top)


def _near_pairs(g: Graph, t: int) -> list[list[tuple[int, int]]]:
    return [
        [(u, d) for u, d in distances_from(g, v, t).items() if d > 0]
        for v in range(g.n)
    ]


def find_coloring(
    g: Graph,
    t: int,
    k: int,
    timeout: float | None = None,
    symmetry: bool = True,
    deadline: float | None = None,
) -> SearchResult:
    """Search for a t-tone k-coloring of ``g``.

    ``ABSENT`` is a proof that none exists; ``TIMEOUT`` means the search was
    cut short after ``timeout`` seconds and proves nothing.
    """
    started = time.perf_counter()
    if deadline is None and timeout is not None:
        deadline = started + timeout
    stats = SearchStats()
    if k < t:
        stats.elapsed = time.perf_counter() - started
        return SearchResult(Status.ABSENT, None, stats)
    tables = _tables(k, t)
    conflicts, canonical, top = tables.conflicts, tables.canonical, tables.top
    n = g.n
    near = _near_pairs(g, t)
    full = (1 << len(tables.labels)) - 1
    dom = [full] * n
    assigned = [-1] * n
    pressure = [0] * n  # colored vertices within distance t
    prunes = stats.prunes

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if assigned[v] >= 0:
                continue
            cand = (-pressure[v], dom[v].bit_count(), v)
            if key is None or cand < key:
                best, key = v, cand
        return best

    def search(depth: int, maxcolor: int) -> bool:
        stats.nodes += 1
        if deadline is not None and stats.nodes & 1023 == 0 and time.perf_counter() > deadline:
            raise _Timeout
        if depth == n:
            return True
        v = pick()
        options = dom[v]
        if symmetry:
            allowed = options & canonical[maxcolor]
            if allowed != options:
                prunes["symmetry"] += 1
            options = allowed
        while options:
            low = options & -options
            i = low.bit_length() - 1
            options ^= low
            saved = []
            ok = True
            for u, d in near[v]:
                if assigned[u] >= 0:
                    continue
                new = dom[u] & ~conflicts[d][i]
                if new != dom[u]:
                    saved.append((u, dom[u]))
                    dom[u] = new
                    if not new:
                        ok = False
                        break
            if ok:
                assigned[v] = i
                for u, _ in near[v]:
                    pressure[u] += 1
                if search(depth + 1, max(maxcolor, top[i])):
                    return True
                for u, _ in near[v]:
                    pressure[u] -= 1
                assigned[v] = -1
            else:
                prunes["wipeout"] += 1
            for u, old in saved:
                dom[u] = old
        return False

    try:
        found = search(0, 0)
    except _Timeout:
        stats.elapsed = time.perf_counter() - started
        return SearchResult(Status.TIMEOUT, None, stats)
    stats.elapsed = time.perf_counter() - started
    if not found:
        return SearchResult(Status.ABSENT, None, stats)
    coloring = PartialToneColoring(
        ToneParams(t, k), {v: tables.labels[assigned[v]] for v in range(n)}
    )
    if verify_coloring(g, coloring):
        raise InternalInvariant("search returned an invalid coloring")
    return SearchResult(Status.FOUND, coloring, stats)


@dataclass
class TauResult:
    """Outcome of :func:`exact_tau`.

    ``value`` is the chromatic number when ``status`` is FOUND; ABSENT means no
    coloring exists with ``kmax`` colors (the value is above the cap).
    """

    value: int | None
    status: Status
    witness: PartialToneColoring | None
    stats: SearchStats
    per_k: dict[int, Status] = field(default_factory=dict)

    @property
    def above_cap(self) -> bool:
        return self.status is Status.ABSENT


def exact_tau(
    g: Graph,
    t: int,
    kmax: int,
    timeout: float | None = None,
    start: int | None = None,
) -> TauResult:
    """Least ``k <= kmax`` admitting a t-tone k-coloring, searched upward.

    ``start`` may be set to a known lower bound; it defaults to ``t``.
    """
    deadline = None if timeout is None else time.perf_counter() + timeout
    total = SearchStats()
    per_k: dict[int, Status] = {}
    for k in range(max(t, start or t), kmax + 1):
        res = find_coloring(g, t, k, deadline=deadline)
        total.merge(res.stats)
        per_k[k] = res.status
        if res.status is Status.FOUND:
            return TauResult(k, Status.FOUND, res.coloring, total, per_k)
        if res.status is Status.TIMEOUT:
            return TauResult(None, Status.TIMEOUT, None, total, per_k)
    return TauResult(None, Status.ABSENT, None, total, per_k)


def brute_force_coloring(g: Graph, t: int, k: int) -> PartialToneColoring | None:
    """Reference search with no heuristics: vertices in id order, labels in
    lexicographic order, each partial assignment checked pair by pair against
    every earlier vertex.  Shares nothing with :func:`find_coloring` beyond
    BFS distances."""
    if k < t:
        return None
    labels = [make_label(*cs) for cs in itertools.combinations(range(1, k + 1), t)]
    dist = [distances_from(g, v) for v in range(g.n)]
    chosen: list[Label] = []

    def fits(v: int, L: Label) -> bool:
        for u in range(v):
            d = dist[v].get(u)
            if d is not None and len(set(label_colors(L)) & set(label_colors(chosen[u]))) >= d:
                return False
        return True

    def go(v: int) -> bool:
        if v == g.n:
            return True
        for L in labels:
            if fits(v, L):
                chosen.append(L)
                if go(v + 1):
                    return True
                chosen.pop()
        return False

    if not go(0):
        return None
    return PartialToneColoring(ToneParams(t, k), dict(enumerate(chosen)))


def enumerate_colorings(g: Graph, t: int, k: int):
    """Every t-tone k-coloring of ``g`` by full product enumeration (tiny graphs only)."""
    labels = [make_label(*cs) for cs in itertools.combinations(range(1, k + 1), t)]
    dist = [distances_from(g, v) for v in range(g.n)]
    pairs = [(u, v, d) for v in range(g.n) for u, d in dist[v].items() if u < v]
    for combo in itertools.product(labels, repeat=g.n):
        if all((combo[u] & combo[v]).bit_count() < d for u, v, d in pairs):
            yield combo


def brute_force_tau(g: Graph, t: int, kmax: int) -> int | None:
    for k in range(t, kmax + 1):
        if brute_force_coloring(g, t, k) is not None:
            return k
    return None


# ---------------------------------------------------------------------------
# Heawood certificates


def _disjoint(a: Label, b: Label) -> bool:
    return not a & b


def has_complementary_pair(family) -> bool:
    """Whether labels ``ab, cd, ac, bd`` on four distinct colors all lie in ``family``.

    On any four colors the three ways to split them into two pairs are
    ``{ab, cd}``, ``{ac, bd}``, ``{ad, bc}``; a complementary pair is two of
    these splits fully present.
    """
    fam = set(family)
    for x, y in itertools.combinations(fam, 2):
        if not _disjoint(x, y):
            continue
        a, b = label_colors(x)
        c, d = label_colors(y)
        if make_label(a, c) in fam and make_label(b, d) in fam:
            return True
        if make_label(a, d) in fam and make_label(b, c) in fam:
            return True
    return False


def has_disjoint_triple(family) -> bool:
    fam = list(set(family))
    for x, y, z in itertools.combinations(fam, 3):
        if not (x & y or x & z or y & z):
            return True
    return False


@dataclass
class ClaimCheck:
    holds: bool
    checked: int
    counterexample: tuple[Label, ...] | None


def check_seven_label_claim() -> ClaimCheck:
    """Every 7 of the 15 labels on colors 1..6 contain a complementary pair or
    a disjoint triple; scans all 6435 families."""
    pool = all_labels(6, 2)
    checked = 0
    for family in itertools.combinations(pool, 7):
        checked += 1
        if not has_complementary_pair(family) and not has_disjoint_triple(family):
            return ClaimCheck(False, checked, family)
    return ClaimCheck(True, checked, None)


@dataclass
class HeawoodCertificate:
    value: int
    upper: PartialToneColoring
    lower: SearchResult


def heawood_tau2(timeout: float | None = None) -> HeawoodCertificate:
    """2-tone chromatic number of the Heawood graph with both certificates.

    The upper certificate is the 7-coloring on the label ring; the lower one is
    the exhaustive search proving no 6-coloring exists.
    """
    g = heawood()
    upper = heawood_seven_coloring()
    if verify_coloring(g, upper):
        raise InternalInvariant("Heawood 7-coloring failed verification")
    lower = find_coloring(g, 2, 6, timeout=timeout)
    if lower.status is Status.TIMEOUT:
        raise TimeoutError("Heawood 6-color search timed out")
    if lower.status is Status.FOUND:
        raise InternalInvariant(f"found a 2-tone 6-coloring of Heawood: {lower.coloring}")
    return HeawoodCertificate(7, upper, lower)
