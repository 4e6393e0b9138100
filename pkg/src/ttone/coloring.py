"""Labels, partial t-tone colorings and the validity machinery.

A label is a set of ``t`` colors from ``1..k``.  Labels are stored as integer
bitmasks (bit ``c`` set for color ``c``) so the size of an intersection is a
single ``&`` followed by a popcount.  The functions below always treat labels
in lexicographic order of their sorted color tuples, which is the order
``itertools.combinations`` produces.

Coloring rule: two colored vertices at distance ``d`` may share fewer than
``d`` colors.  With ``t`` colors per label only pairs at distance ``<= t`` can
ever conflict, so everything here looks at BFS balls of radius ``t``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Container, Iterable, Iterator, Mapping

from .errors import AlreadyColored, InvalidLabel, InvalidVertex, NotValid
from .graph import Graph, distances_from

Label = int


def make_label(*colors: int) -> Label:
    """``make_label(1, 2)`` is the label written ``12``."""
    if len(colors) == 1 and not isinstance(colors[0], int):
        colors = tuple(colors[0])
    mask = 0
    for c in colors:
        if c < 1:
            raise InvalidLabel(f"colors start at 1, got {c}")
        if mask >> c & 1:
            raise InvalidLabel(f"repeated color {c}")
        mask |= 1 << c
    return mask


def parse_label(text: str) -> Label:
    """``"12"`` -> {1, 2}.  Comma-separated for colors above 9: ``"3,11"``."""
    parts = text.split(",") if "," in text else list(text)
    return make_label(*(int(p) for p in parts))


def label_colors(label: Label) -> tuple[int, ...]:
    out = []
    c = 0
    while label:
        if label & 1:
            out.append(c)
        label >>= 1
        c += 1
    return tuple(out)


def label_str(label: Label) -> str:
    cs = label_colors(label)
    sep = "," if cs and cs[-1] > 9 else ""
    return sep.join(map(str, cs))


def label_size(label: Label) -> int:
    return label.bit_count()


def colors_mask(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << c
    return mask


@lru_cache(maxsize=64)
def all_labels(k: int, t: int) -> tuple[Label, ...]:
    """Every ``t``-subset of ``1..k`` in lexicographic order."""
    return tuple(colors_mask(cs) for cs in itertools.combinations(range(1, k + 1), t))


@dataclass(frozen=True)
class ToneParams:
    t: int
    k: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"t must be at least 1, got {self.t}")
        if self.k < self.t:
            raise ValueError(f"need k >= t, got t={self.t}, k={self.k}")

    def check(self, label: Label) -> None:
        if not isinstance(label, int) or label < 0:
            raise InvalidLabel(f"label must be a color bitmask, got {label!r}")
        if label & 1 or label >> (self.k + 1):
            raise InvalidLabel(f"label {label_str(label)} has a color outside 1..{self.k}")
        if label.bit_count() != self.t:
            raise InvalidLabel(f"label {label_str(label)} does not have {self.t} colors")


@dataclass(frozen=True)
class PartialToneColoring:
    """Labels on a subset of the vertices, with fixed ``(t, k)``.

    Value semantics: :func:`extend` returns a new object and never touches the
    original.  Construction does not check the distance condition; use
    :func:`verify_coloring` for that.
    """

    params: ToneParams
    labels: Mapping[int, Label] = field(default_factory=dict)

    def __post_init__(self):
        for label in self.labels.values():
            self.params.check(label)

    @classmethod
    def empty(cls, t: int, k: int) -> "PartialToneColoring":
        return cls(ToneParams(t, k), {})

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def k(self) -> int:
        return self.params.k

    def __contains__(self, v: int) -> bool:
        return v in self.labels

    def __getitem__(self, v: int) -> Label:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    def get(self, v: int) -> Label | None:
        return self.labels.get(v)

    def colors_used(self) -> set[int]:
        mask = 0
        for label in self.labels.values():
            mask |= label
        return set(label_colors(mask))

    def is_total(self, g: Graph) -> bool:
        return len(self.labels) == g.n

    def __repr__(self) -> str:
        body = ", ".join(f"{v}:{label_str(L)}" for v, L in sorted(self.labels.items()))
        return f"PartialToneColoring(t={self.t}, k={self.k}, {{{body}}})"


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    shared: int
    dist: int


def forbids(label_u: Label, dist: int, candidate: Label) -> bool:
    """Whether a vertex labelled ``label_u`` at distance ``dist`` rules out ``candidate``."""
    if dist < 1:
        raise ValueError("distance must be at least 1")
    return (label_u & candidate).bit_count() >= dist


def verify_coloring(g: Graph, c: PartialToneColoring) -> list[Violation]:
    """All pairs of colored vertices that break the distance rule.

    An empty list means ``c`` is a valid (partial) coloring of ``g``.
    """
    t = c.t
    labels = c.labels
    for v in labels:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"colored vertex {v} not in graph")
    out = []
    for u in sorted(labels):
        lu = labels[u]
        for w, d in sorted(distances_from(g, u, t).items()):
            if w <= u or w not in labels:
                continue
            shared = (lu & labels[w]).bit_count()
            if shared >= d:
                out.append(Violation(u, w, shared, d))
    return out


def is_valid(g: Graph, c: PartialToneColoring) -> bool:
    return not verify_coloring(g, c)


def _require_uncolored(g: Graph, c: PartialToneColoring, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidVertex(f"vertex {v} out of range")
    if v in c.labels:
        raise AlreadyColored(f"vertex {v} already has label {label_str(c.labels[v])}")


def _free_mask(g: Graph, c: PartialToneColoring, v: int) -> int:
    used = 0
    for w in g.adjacency[v]:
        used |= c.labels.get(w, 0)
    return colors_mask(range(1, c.k + 1)) & ~used


def free_colors(g: Graph, c: PartialToneColoring, v: int) -> set[int]:
    """Colors of ``1..k`` that no colored neighbour of ``v`` uses."""
    _require_uncolored(g, c, v)
    return set(label_colors(_free_mask(g, c, v)))


def _require_two_tone(c: PartialToneColoring) -> None:
    if c.t != 2:
        raise ValueError("candidates and obstructions are defined for t = 2 only")


def candidate_labels(g: Graph, c: PartialToneColoring, v: int) -> set[Label]:
    """2-subsets of the free colors at ``v``."""
    _require_two_tone(c)
    free = sorted(free_colors(g, c, v))
    return {make_label(a, b) for a, b in itertools.combinations(free, 2)}


def obstructions(g: Graph, c: PartialToneColoring, v: int) -> set[Label]:
    """Candidates at ``v`` that already sit on a colored second-neighbour."""
    cands = candidate_labels(g, c, v)
    seconds = {c.labels[w] for w, d in distances_from(g, v, 2).items() if d == 2 and w in c.labels}
    return cands & seconds


@dataclass
class Constraints:
    """What the colored vertices near ``v`` impose on its label.

    ``blocked`` holds the colors on colored neighbours, ``exact`` the labels of
    colored vertices at distance exactly ``t`` (those forbid only an identical
    label), and ``near`` the ``(label, distance)`` pairs for ``2 <= d < t``.
    """

    free: tuple[int, ...]
    exact: set[Label]
    near: list[tuple[Label, int]]

    def allows(self, label: Label) -> bool:
        if label in self.exact:
            return False
        for lu, d in self.near:
            if (lu & label).bit_count() >= d:
                return False
        return True

    def labels(self, t: int) -> Iterator[Label]:
        """Allowed labels in lexicographic order."""
        for cs in itertools.combinations(self.free, t):
            mask = colors_mask(cs)
            if self.allows(mask):
                yield mask


def constraints_at(
    g: Graph,
    labels: Mapping[int, Label],
    v: int,
    t: int,
    palette: Iterable[int],
    among: Container[int] | None = None,
) -> Constraints:
    """Collect the constraints on ``v`` from colored vertices within distance ``t``.

    ``palette`` is the pool of colors to draw from.  When ``among`` is given,
    only colored vertices in that collection count.
    """
    pool = among
    blocked = 0
    exact: set[Label] = set()
    near: list[tuple[Label, int]] = []
    for w, d in distances_from(g, v, t).items():
        if d == 0 or w not in labels or (pool is not None and w not in pool):
            continue
        lw = labels[w]
        if d == 1:
            blocked |= lw
        elif d == t:
            exact.add(lw)
        else:
            near.append((lw, d))
    free = tuple(col for col in sorted(palette) if not blocked >> col & 1)
    return Constraints(free, exact, near)


def valid_labels(g: Graph, c: PartialToneColoring, v: int) -> set[Label]:
    """Every label by which ``c`` extends to the uncolored vertex ``v``."""
    _require_uncolored(g, c, v)
    cons = constraints_at(g, c.labels, v, c.t, range(1, c.k + 1))
    return set(cons.labels(c.t))


def least_valid_label(g: Graph, c: PartialToneColoring, v: int) -> Label | None:
    """Lexicographically least label in :func:`valid_labels`, or ``None``."""
    _require_uncolored(g, c, v)
    cons = constraints_at(g, c.labels, v, c.t, range(1, c.k + 1))
    return next(cons.labels(c.t), None)


def extend(g: Graph, c: PartialToneColoring, v: int, label: Label) -> PartialToneColoring:
    """A copy of ``c`` with ``v`` labelled ``label``; raises NotValid if forbidden."""
    _require_uncolored(g, c, v)
    c.params.check(label)
    cons = constraints_at(g, c.labels, v, c.t, range(1, c.k + 1))
    free = colors_mask(cons.free)
    if label & ~free or not cons.allows(label):
        raise NotValid(f"label {label_str(label)} is forbidden at vertex {v}")
    labels = dict(c.labels)
    labels[v] = label
    return PartialToneColoring(c.params, labels)


def drop_largest(label: Label, count: int) -> Label:
    """Remove the ``count`` largest colors of ``label``."""
    for _ in range(count):
        label &= ~(1 << (label.bit_length() - 1))
    return label


def restrict_tones(c: PartialToneColoring, t: int) -> PartialToneColoring:
    """Turn a ``t'``-tone coloring into a ``t``-tone one by dropping each
    label's ``t' - t`` largest colors.  Intersections can only shrink, so a
    valid coloring stays valid."""
    if not 1 <= t <= c.t:
        raise ValueError(f"cannot restrict {c.t}-tone coloring to {t} tones")
    drop = c.t - t
    return PartialToneColoring(
        ToneParams(t, c.k), {v: drop_largest(L, drop) for v, L in c.labels.items()}
    )


def compact_colors(c: PartialToneColoring) -> PartialToneColoring:
    """Rename the colors actually used to ``1..m`` (order preserving)."""
    used = sorted(c.colors_used())
    rename = {old: new for new, old in enumerate(used, start=1)}
    labels = {v: colors_mask(rename[x] for x in label_colors(L)) for v, L in c.labels.items()}
    return PartialToneColoring(ToneParams(c.t, max(len(used), c.t)), labels)
