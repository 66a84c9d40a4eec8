"""Simple undirected graphs and the exact metric oracles computed on them.

Every quantity here is computed by direct search (breadth-first search,
shortest augmenting paths, exhaustive triangle scans), never by appeal to
the algebraic structure a graph came from.  The closed-form predictions in
:mod:`zdgraphs.formulas` are checked against these functions.
"""

from __future__ import annotations

import enum
import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError

__all__ = [
    "Marker",
    "UNBOUNDED",
    "ACYCLIC",
    "NO_CYCLE",
    "SimpleGraph",
    "GraphMetricsReport",
    "Complementation",
    "distance",
    "distance_matrix",
    "eccentricity",
    "eccentricities",
    "diameter_radius",
    "girth",
    "smallest_cycle_through_pair",
    "triangle_vertices",
    "vertex_on_triangle",
    "triangulation_predicates",
    "is_orthogonal",
    "is_complemented",
    "metrics_report",
    "to_dot",
]


class Marker(enum.Enum):
    """Non-numeric outcomes of metric queries."""

    UNBOUNDED = "unbounded"
    ACYCLIC = "acyclic"
    NO_CYCLE = "no-cycle"

    def __repr__(self) -> str:
        return f"<{self.value}>"

    def __str__(self) -> str:
        return self.value


UNBOUNDED = Marker.UNBOUNDED
ACYCLIC = Marker.ACYCLIC
NO_CYCLE = Marker.NO_CYCLE


class SimpleGraph:
    """Irreflexive symmetric adjacency on vertices ``0 .. vertex_count - 1``.

    Parameters
    ----------
    vertex_count : int
        Number of vertices.
    edges : iterable of pairs
        Undirected edges; duplicates are merged, loops are rejected.
    labels : sequence, optional
        One opaque payload per vertex.  Only the ring module interprets them.

    The graph is immutable after construction.
    """

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[Hashable] | None = None,
    ) -> None:
        if vertex_count < 0:
            raise InputError(f"vertex_count must be >= 0, got {vertex_count}")
        if labels is not None and len(labels) != vertex_count:
            raise InputError(
                f"{len(labels)} labels supplied for {vertex_count} vertices"
            )
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            if u == v:
                raise InputError(f"loop at vertex {u}: adjacency must be irreflexive")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = vertex_count
        self._nbrs: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._labels: tuple[Hashable, ...] | None = (
            tuple(labels) if labels is not None else None
        )

    @classmethod
    def from_adjacency_matrix(
        cls, matrix: Any, labels: Sequence[Hashable] | None = None
    ) -> "SimpleGraph":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InputError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise InputError("adjacency matrix is not symmetric")
        if a.diagonal().any():
            raise InputError("adjacency matrix has a nonzero diagonal")
        us, vs = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], zip(us.tolist(), vs.tolist()), labels)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @property
    def vertex_count(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    @property
    def labels(self) -> tuple[Hashable, ...] | None:
        return self._labels

    def label(self, u: int) -> Hashable:
        self.check_vertex(u)
        return self._labels[u] if self._labels is not None else u

    def vertex_of(self, label: Hashable) -> int:
        """Vertex id carrying ``label``."""
        try:
            return self._label_index[label]
        except KeyError:
            raise InputError(f"no vertex carries label {label!r}") from None

    @cached_property
    def _label_index(self) -> dict[Hashable, int]:
        if self._labels is None:
            return {u: u for u in range(self._n)}
        return {lab: u for u, lab in enumerate(self._labels)}

    def check_vertex(self, u: int) -> None:
        if not isinstance(u, (int, np.integer)) or not 0 <= u < self._n:
            raise InputError(f"invalid vertex id {u!r} (graph has {self._n} vertices)")

    def neighbors(self, u: int) -> frozenset[int]:
        self.check_vertex(u)
        return self._nbrs[u]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._nbrs[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(a, b)`` with ``a < b``, sorted."""
        return [(u, v) for u in range(self._n) for v in sorted(self._nbrs[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._nbrs) // 2

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=bool)
        for u, s in enumerate(self._nbrs):
            if s:
                a[u, list(s)] = True
        a.setflags(write=False)
        return a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._n == other._n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self._n, self._nbrs))

    def __repr__(self) -> str:
        return f"SimpleGraph(vertex_count={self._n}, edge_count={self.edge_count})"


# -- distances ---------------------------------------------------------------


def _bfs(g: SimpleGraph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    nbrs = g._nbrs
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in nbrs[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def distance(g: SimpleGraph, u: int, v: int) -> int | Marker:
    """Number of edges on a shortest ``u``-``v`` path, or ``UNBOUNDED``."""
    g.check_vertex(u)
    g.check_vertex(v)
    d = _bfs(g, u)[v]
    return UNBOUNDED if d < 0 else d


def distance_matrix(g: SimpleGraph) -> np.ndarray:
    """All-pairs BFS distances; unreachable pairs hold ``-1``."""
    out = np.empty((g.vertex_count, g.vertex_count), dtype=np.int64)
    for s in range(g.vertex_count):
        out[s] = _bfs(g, s)
    return out


def eccentricity(g: SimpleGraph, u: int) -> int | Marker:
    g.check_vertex(u)
    d = _bfs(g, u)
    return UNBOUNDED if min(d) < 0 else max(d)


def eccentricities(g: SimpleGraph) -> dict[int, int | Marker]:
    dm = distance_matrix(g)
    return {
        u: (UNBOUNDED if (row < 0).any() else int(row.max()))
        for u, row in enumerate(dm)
    }


def _key(x: int | Marker) -> float:
    return float("inf") if isinstance(x, Marker) else x


def diameter_radius(g: SimpleGraph) -> tuple[int | Marker, int | Marker]:
    """``(max eccentricity, min eccentricity)``; ``UNBOUNDED`` propagates."""
    if g.vertex_count == 0:
        raise InputError("diameter and radius are undefined on the empty graph")
    ecc = list(eccentricities(g).values())
    return max(ecc, key=_key), min(ecc, key=_key)


# -- cycles ------------------------------------------------------------------


def girth(g: SimpleGraph) -> int | Marker:
    """Length of a shortest cycle, or ``ACYCLIC`` for a forest.

    One BFS per root; a non-tree edge ``x-y`` closes a closed walk of length
    ``d(x) + d(y) + 1`` through the root, and the minimum over all roots is a
    shortest cycle.
    """
    best = float("inf")
    nbrs = g._nbrs
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in nbrs[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return ACYCLIC if best == float("inf") else int(best)


def smallest_cycle_through_pair(g: SimpleGraph, u: int, v: int) -> int | Marker:
    """Length of a shortest simple cycle containing both ``u`` and ``v``.

    A simple cycle through two distinct vertices is the union of two
    internally vertex-disjoint ``u``-``v`` paths, so the answer is the cost of
    a minimum two-unit flow from ``u`` to ``v`` with unit vertex capacities.
    The first unit follows a BFS shortest path; the second is a Dijkstra
    search in the residual graph with reduced costs (BFS distances as
    potentials), which is exact.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InputError("smallest_cycle_through_pair needs two distinct vertices")
    nbrs = g._nbrs
    d = _bfs(g, u)
    if d[v] < 0:
        return NO_CYCLE

    # shortest path u = p[0], ..., p[k] = v
    path = [v]
    while path[-1] != u:
        x = path[-1]
        path.append(next(y for y in sorted(nbrs[x]) if d[y] == d[x] - 1))
    path.reverse()
    k = len(path) - 1
    succ = {path[i]: path[i + 1] for i in range(k)}
    pred = {path[i + 1]: path[i] for i in range(k)}
    internal = set(path[1:-1])

    # Split nodes: 2*w is w_in, 2*w + 1 is w_out.  u only exists as u_out,
    # v only as v_in.  Reduced costs are non-negative integers.
    source, target = 2 * u + 1, 2 * v
    best: dict[int, int] = {source: 0}
    heap = [(0, source)]
    while heap:
        c, node = heapq.heappop(heap)
        if node == target:
            return 2 * k + c
        if c > best.get(node, c):
            continue
        w, out_side = divmod(node, 2)
        steps: list[tuple[int, int]] = []
        if out_side:
            if w in internal:
                steps.append((2 * w, 0))  # reverse of the saturated split arc
            for y in nbrs[w]:
                if y == u or d[y] < 0 or succ.get(w) == y:
                    continue
                steps.append((2 * y, 1 + d[w] - d[y]))
        else:
            if w in internal:
                steps.append((2 * pred[w] + 1, 0))  # reverse of the flow arc into w
            else:
                steps.append((2 * w + 1, 0))
        for nxt, cost in steps:
            if nxt == 2 * v + 1 or nxt == 2 * u:
                continue
            nc = c + cost
            if nc < best.get(nxt, nc + 1):
                best[nxt] = nc
                heapq.heappush(heap, (nc, nxt))
    return NO_CYCLE


# -- triangles and orthogonality -----------------------------------------------


def _common_counts(g: SimpleGraph) -> np.ndarray:
    a = g.adjacency_matrix.astype(np.int64)
    return a @ a


def triangle_vertices(g: SimpleGraph) -> np.ndarray:
    """Boolean mask of the vertices lying on at least one triangle."""
    if g.vertex_count == 0:
        return np.zeros(0, dtype=bool)
    on_tri = g.adjacency_matrix & (_common_counts(g) > 0)
    return on_tri.any(axis=1)


def vertex_on_triangle(g: SimpleGraph, u: int) -> bool:
    g.check_vertex(u)
    nu = g._nbrs[u]
    return any(nu & g._nbrs[x] for x in nu)


def triangulation_predicates(g: SimpleGraph) -> tuple[bool, bool]:
    """``(triangulated, hypertriangulated)``.

    Triangulated means every vertex lies on a triangle; hypertriangulated
    means every edge does.  Both are vacuously true on the empty graph.
    """
    if g.vertex_count == 0:
        return True, True
    a = g.adjacency_matrix
    edge_on_tri = _common_counts(g) > 0
    triangulated = bool((a & edge_on_tri).any(axis=1).all())
    hyper = bool(np.all(edge_on_tri[a]))
    return triangulated, hyper


def is_orthogonal(g: SimpleGraph, u: int, v: int) -> bool:
    """``u`` and ``v`` are adjacent and have no common neighbour."""
    return g.has_edge(u, v) and not (g._nbrs[u] & g._nbrs[v])


@dataclass(frozen=True)
class Complementation:
    """Outcome of :func:`is_complemented`; truthy iff the graph is complemented."""

    complemented: bool
    partners: Mapping[int, int] | None = None
    counterexample: int | None = None

    def __bool__(self) -> bool:
        return self.complemented


def is_complemented(g: SimpleGraph) -> Complementation:
    """Search every vertex for an orthogonal partner (smallest id wins)."""
    partners: dict[int, int] = {}
    for u in range(g.vertex_count):
        nu = g._nbrs[u]
        mate = next((v for v in sorted(nu) if not (nu & g._nbrs[v])), None)
        if mate is None:
            return Complementation(False, counterexample=u)
        partners[u] = mate
    return Complementation(True, partners=partners)


# -- reports and export --------------------------------------------------------


@dataclass(frozen=True)
class GraphMetricsReport:
    diameter: int | Marker
    radius: int | Marker
    girth: int | Marker
    eccentricities: Mapping[int, int | Marker] = field(repr=False)
    triangulated: bool
    hypertriangulated: bool
    complemented: bool


def metrics_report(g: SimpleGraph) -> GraphMetricsReport:
    if g.vertex_count == 0:
        raise InputError("metrics are undefined on the empty graph")
    ecc = eccentricities(g)
    vals = list(ecc.values())
    tri, hyper = triangulation_predicates(g)
    return GraphMetricsReport(
        diameter=max(vals, key=_key),
        radius=min(vals, key=_key),
        girth=girth(g),
        eccentricities=ecc,
        triangulated=tri,
        hypertriangulated=hyper,
        complemented=is_complemented(g).complemented,
    )


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: SimpleGraph, label=None) -> str:
    """Graphviz text for ``g``; edges once each, ``A < B``, sorted.

    ``label`` maps a vertex id to its display string and defaults to
    ``str`` of the vertex payload.
    """
    lines = ["graph {"]
    for u in range(g.vertex_count):
        text = label(u) if label is not None else str(g.label(u))
        lines.append(f'  v{u} [label="{_dot_escape(text)}"]')
    for a, b in g.edges():
        lines.append(f"  v{a} -- v{b}")
    lines.append("}")
    return "\n".join(lines) + "\n"
