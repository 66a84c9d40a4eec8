import networkx as nx
import pytest
from hypothesis import strategies as st

from zdgraphs.graph import SimpleGraph
from zdgraphs.ring import GraphKind, ModelConfig, build_graph

ZD, CM = GraphKind.ZERO_DIVISOR, GraphKind.COMAXIMAL


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return h


@st.composite
def small_graphs(draw, max_n: int = 8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(n, [p for p, keep in zip(pairs, mask) if keep])


def model_graph(n: int, a: int, kind, mode: str = "support") -> SimpleGraph:
    return build_graph(ModelConfig.of(n, a, mode), kind)


def E(cfg_or_a, *values):
    """Shorthand for a ring element: ``E(a, 1, 0, 0)``."""
    cfg = cfg_or_a if isinstance(cfg_or_a, ModelConfig) else ModelConfig.of(len(values), cfg_or_a)
    return cfg.element(values)


@pytest.fixture
def g33():
    return model_graph(3, 3, ZD)


@pytest.fixture
def c33():
    return model_graph(3, 3, CM)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
