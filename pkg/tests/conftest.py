import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ttone.graph import build_graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=10, max_degree=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if max_degree is not None:
        deg = [0] * n
        kept = []
        for u, v in chosen:
            if deg[u] < max_degree and deg[v] < max_degree:
                deg[u] += 1
                deg[v] += 1
                kept.append((u, v))
        chosen = kept
    return build_graph(n, chosen)


def all_pairs_distances(g):
    """Floyd-Warshall; deliberately independent of the BFS in the package."""
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def naive_violations(g, labels):
    """Pairs (u, v) breaking |f(u) & f(v)| < d(u, v), from the definition."""
    d = all_pairs_distances(g)
    bad = []
    for u, v in itertools.combinations(sorted(labels), 2):
        shared = len(set(labels[u]) & set(labels[v]))
        if shared >= d[u][v]:
            bad.append((u, v))
    return bad


# -- acceptance reporting -----------------------------------------------------

CRITERIA: dict[int, str] = {}


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    CRITERIA[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
