import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ttone.bounds import (
    ary_tree_lower_bound,
    best_ttone_budget,
    budget_2tone_bipartite,
    budget_2tone_chordal,
    budget_2tone_general,
    budget_ttone_degenerate,
    budget_ttone_general,
    ceil_root,
    color_2tone_bipartite,
    color_2tone_chordal,
    color_2tone_greedy,
    color_tree_ttone,
    color_ttone_best,
    color_ttone_degenerate,
    color_ttone_greedy,
    tree_levels,
    tree_tau2,
)
from ttone.coloring import label_colors, label_str, verify_coloring
from ttone.errors import NotATree, NotBipartite, NotChordal
from ttone.generators import (
    complete,
    complete_ary_tree,
    complete_bipartite,
    cycle,
    empty,
    path,
    random_family,
    star,
)
from ttone.graph import max_degree

sqrt = sympy.sqrt


def exact_ceil(expr):
    return int(sympy.ceiling(sympy.nsimplify(expr)))


# -- integer-exact budgets vs symbolic ceilings -----------------------------


@given(st.integers(1, 10**6), st.integers(1, 7))
def test_ceil_root(x, t):
    m = ceil_root(x, t)
    assert m**t >= x and (m - 1) ** t < x


@given(st.integers(0, 10**5))
def test_budget_2tone_general_exact(d):
    assert budget_2tone_general(d) == exact_ceil((2 + sqrt(2)) * d)


@given(st.integers(0, 10**5))
def test_budget_bipartite_exact(d):
    assert budget_2tone_bipartite(d) == 2 * exact_ceil(sqrt(2) * d)


@given(st.integers(0, 10**5))
def test_budget_chordal_exact(d):
    assert budget_2tone_chordal(d) == exact_ceil((1 + sqrt(6) / 2) * d) + 1


@given(st.integers(1, 6), st.integers(1, 5), st.integers(1, 2000))
def test_budget_degenerate_exact(k, t, r):
    expected = k * t + exact_ceil(k * t**2 * sympy.Integer(r) ** (1 - sympy.Rational(1, t)))
    assert budget_ttone_degenerate(k, t, r) == expected


@given(st.integers(1, 10**4))
def test_tree_tau2_exact(d):
    assert tree_tau2(d) == exact_ceil((5 + sqrt(1 + 8 * d)) / 2)


def test_budget_examples():
    assert budget_2tone_general(3) == 11
    assert budget_2tone_general(0) == 0
    assert budget_2tone_general(10) == 35
    assert budget_2tone_chordal(3) == 8
    assert budget_ttone_general(3, 2) == 18
    assert budget_ttone_general(2, 3) == 24
    assert budget_ttone_degenerate(2, 2, 9) == 28
    assert budget_ttone_degenerate(2, 2, 4) == 20
    assert [tree_tau2(d) for d in (2, 3, 6)] == [5, 5, 6]


def test_perfect_square_boundaries():
    # 1 + 8d is a perfect square at d = 3, 6, 10: the ceiling must not round up
    assert tree_tau2(3) == 5 and tree_tau2(6) == 6 and tree_tau2(10) == 7
    # r a perfect t-th power makes the degenerate term an exact integer
    assert budget_ttone_degenerate(1, 3, 8) == 3 + 9 * 4


@given(st.integers(1, 10**4))
def test_ttone_general_never_beats_2tone_at_t2(d):
    assert budget_ttone_general(d, 2) >= budget_2tone_general(d)


def test_tree_tau2_rejects_zero():
    with pytest.raises(ValueError):
        tree_tau2(0)


# -- lower-bound evaluator --------------------------------------------------


def direct_sum(r, t):
    h = math.ceil(math.log2(t))
    vertices = sum((r - 1) ** i for i in range(h + 1))
    return sum(max(0, t - 2 * h * i) for i in range(vertices))


def test_ary_tree_pinned():
    assert ary_tree_lower_bound(3, 2).value == 2
    assert ary_tree_lower_bound(3, 4).value == 4


@pytest.mark.parametrize("r", [3, 4, 5, 7])
@pytest.mark.parametrize("t", [2, 3, 4, 5, 8, 16, 33, 100])
def test_ary_tree_matches_direct_sum(r, t):
    b = ary_tree_lower_bound(r, t)
    assert b.value == direct_sum(r, t)
    assert b.value >= t
    assert b.vertices == complete_ary_tree(r - 1, b.height).n
    assert b.value >= t * t // (8 * b.height)


def test_ary_tree_rejects_small_parameters():
    with pytest.raises(ValueError):
        ary_tree_lower_bound(2, 4)
    with pytest.raises(ValueError):
        ary_tree_lower_bound(3, 1)


# -- colorers ---------------------------------------------------------------


def check(g, coloring, report):
    assert verify_coloring(g, coloring) == []
    assert len(coloring) == g.n
    assert report.valid
    assert report.used == len(coloring.colors_used()) <= report.budget
    assert max(coloring.colors_used(), default=0) <= coloring.k


def test_2tone_greedy_examples():
    c, rep = color_2tone_greedy(complete(2))
    assert rep.budget == 4
    assert [label_str(c[v]) for v in (0, 1)] == ["12", "34"]
    c, rep = color_2tone_greedy(empty(5))
    assert all(label_str(c[v]) == "12" for v in range(5))


@pytest.mark.parametrize("seed", range(40))
def test_2tone_greedy_random(seed):
    g = random_family("max_degree_r", 25, 1 + seed % 8, seed)
    c, rep = color_2tone_greedy(g)
    check(g, c, rep)
    assert rep.budget == budget_2tone_general(max_degree(g))


def test_bipartite_examples():
    c, rep = color_2tone_bipartite(cycle(4))
    check(cycle(4), c, rep)
    assert rep.budget == 6 and rep.extra["palette_size"] == 3
    # ceil(sqrt(2) * 8) = 12 colors per side
    g = star(8)
    c, rep = color_2tone_bipartite(g)
    check(g, c, rep)
    assert rep.budget == 24
    leaves = {c[v] for v in range(1, 9)}
    assert len(leaves) == 8
    # the center is side A, so the leaves draw from the second palette
    assert max(label_colors(c[0])) <= 12
    assert all(min(label_colors(L)) > 12 for L in leaves)
    with pytest.raises(NotBipartite):
        color_2tone_bipartite(cycle(5))


@pytest.mark.parametrize("seed", range(30))
def test_bipartite_palettes_are_disjoint(seed):
    g = random_family("bipartite", 30, 1 + seed % 8, seed)
    c, rep = color_2tone_bipartite(g)
    check(g, c, rep)
    p = rep.extra["palette_size"]
    for u, v in g.edges():
        su = max(label_colors(c[u])) <= p
        sv = max(label_colors(c[v])) <= p
        assert su != sv


def test_chordal_examples():
    c, rep = color_2tone_chordal(complete(4))
    assert rep.budget == 8 and rep.used == 8
    with pytest.raises(NotChordal):
        color_2tone_chordal(cycle(4))


@pytest.mark.parametrize("seed", range(30))
def test_chordal_random(seed):
    g = random_family("chordal", 30, 1 + seed % 8, seed)
    c, rep = color_2tone_chordal(g)
    check(g, c, rep)
    assert rep.budget == max(budget_2tone_chordal(max_degree(g)), 2)


def test_chordal_delta_three_budget():
    for seed in range(50):
        g = random_family("chordal", 12, 3, seed)
        if max_degree(g) == 3:
            assert color_2tone_chordal(g)[1].budget == 8
            return
    pytest.fail("no chordal graph with maximum degree 3 generated")


def test_ttone_greedy_examples():
    g = random_family("max_degree_r", 20, 3, 7)
    assert max_degree(g) == 3
    c, rep = color_ttone_greedy(g, 2)
    check(g, c, rep)
    assert rep.budget == 18
    c, rep = color_ttone_greedy(path(4), 3)
    check(path(4), c, rep)
    assert rep.budget == 24
    c, rep = color_ttone_greedy(cycle(5), 1)
    check(cycle(5), c, rep)
    assert rep.budget == 4
    assert all(c[u] != c[v] for u, v in cycle(5).edges())


@pytest.mark.parametrize("seed", range(30))
def test_ttone_random(seed):
    t = 1 + seed % 3
    g = random_family("max_degree_r", 20, 1 + seed % 6, seed)
    check(g, *color_ttone_greedy(g, t))
    h = random_family("k_degenerate", 30, 1 + seed % 3, seed, max_degree=8)
    c, rep = color_ttone_degenerate(h, t)
    check(h, c, rep)


def test_degenerate_examples():
    tree = random_family("tree_with_max_degree", 30, 4, 3)
    assert max_degree(tree) == 4
    c, rep = color_ttone_degenerate(tree, 2)
    check(tree, c, rep)
    assert rep.budget == 20
    assert rep.extra["degeneracy"] == 1


def test_degenerate_three_degenerate_harness():
    for seed in range(200):
        g = random_family("k_degenerate", 10 + seed % 30, 3, seed)
        check(g, *color_ttone_degenerate(g, 2))


def test_best_budget_picks_smaller():
    g = random_family("k_degenerate", 40, 1, 0, max_degree=8)
    name, budget = best_ttone_budget(g, 2)
    d = max_degree(g)
    assert budget == min(budget_ttone_general(d, 2), budget_ttone_degenerate(2, 2, d))
    c, rep = color_ttone_best(g, 2)
    assert rep.algorithm == name and rep.budget == budget


# -- tree colorer -----------------------------------------------------------


def test_tree_examples():
    g = star(9)
    c, rep = color_tree_ttone(g, 2)
    check(g, c, rep)
    assert rep.used >= 7
    c, rep = color_tree_ttone(path(2), 2)
    check(path(2), c, rep)
    assert not c[0] & c[1]
    with pytest.raises(NotATree):
        color_tree_ttone(cycle(3), 2)


@pytest.mark.parametrize("t", [1, 2, 3, 4])
@pytest.mark.parametrize("seed", range(8))
def test_tree_level_palettes(t, seed):
    g = random_family("tree_with_max_degree", 60, 2 + seed, seed)
    c, rep = color_tree_ttone(g, t)
    check(g, c, rep)
    s, tones = rep.extra["palette_size"], rep.extra["tones_used"]
    level = tree_levels(g)
    for v in range(g.n):
        base = (level[v] % (tones + 1)) * s
        assert all(base < x <= base + s for x in label_colors(c[v]))


def test_tree_forest_input():
    g = random_family("tree_with_max_degree", 10, 3, 0)
    forest = g.__class__(g.n + 3, g.adjacency + ((), (), ()))
    check(forest, *color_tree_ttone(forest, 2))


@pytest.mark.parametrize("delta", [1, 2, 5, 17, 64, 300, 2000])
def test_tree_tau2_below_star_coloring(delta):
    c, rep = color_tree_ttone(star(delta), 2)
    assert verify_coloring(star(delta), c) == []
    assert tree_tau2(delta) <= rep.used


def test_complete_bipartite_is_not_a_tree():
    with pytest.raises(NotATree):
        color_tree_ttone(complete_bipartite(2, 2), 2)
