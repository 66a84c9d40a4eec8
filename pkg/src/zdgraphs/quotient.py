"""Twin quotients of simple graphs and isomorphism lifting.

Vertices with identical open neighbourhoods are glued into one class.  A
quotient isomorphism that preserves class sizes lifts to an isomorphism of
the parent graphs by matching class members one to one.  For the two graphs
of a finite function-ring model the quotients are always isomorphic through
the support-complement map; whether the lift goes through is a pure
class-size question.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .errors import InputError
from .graph import SimpleGraph
from .isomorphism import is_isomorphism
from .ring import GraphKind, ModelConfig, RingElement, build_graph, cozero_set

__all__ = [
    "EquivClass",
    "QuotientGraph",
    "LiftResult",
    "neighborhood_class",
    "build_quotient",
    "verify_well_defined",
    "is_quotient_isomorphism",
    "canonical_phi",
    "class_size",
    "class_size_formula",
    "lift_isomorphism",
    "quotient_to_dot",
    "class_table",
    "class_table_json",
]


@dataclass(frozen=True)
class EquivClass:
    representative: int
    members: tuple[int, ...]
    neighborhood: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class QuotientGraph:
    """Classes in order of smallest member, their adjacency, and ``class_of``."""

    classes: tuple[EquivClass, ...]
    graph: SimpleGraph
    class_of: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def adjacent(self, i: int, j: int) -> bool:
        return self.graph.has_edge(i, j)


def neighborhood_class(g: SimpleGraph, u: int) -> frozenset[int]:
    """The open neighbourhood of ``u``."""
    return g.neighbors(u)


def build_quotient(g: SimpleGraph) -> QuotientGraph:
    fibers: dict[frozenset[int], list[int]] = {}
    for u in range(g.vertex_count):
        fibers.setdefault(g.neighbors(u), []).append(u)
    groups = sorted(fibers.values(), key=lambda ms: ms[0])
    class_of = [0] * g.vertex_count
    for idx, ms in enumerate(groups):
        for u in ms:
            class_of[u] = idx
    classes = tuple(
        EquivClass(ms[0], tuple(ms), g.neighbors(ms[0])) for ms in groups
    )
    edges = {
        tuple(sorted((class_of[c.representative], class_of[w])))
        for c in classes
        for w in c.neighborhood
    }
    labels = [g.label(c.representative) for c in classes]
    return QuotientGraph(classes, SimpleGraph(len(classes), sorted(edges), labels), tuple(class_of))


def verify_well_defined(g: SimpleGraph, q: QuotientGraph) -> bool:
    """Audit a quotient against its parent graph, pair by pair.

    Checks that the classes partition the vertex set, that members share a
    neighbourhood, and that every cross-class pair of members is adjacent
    exactly when the two classes are.
    """
    n = g.vertex_count
    if len(q.class_of) != n:
        raise InputError(f"quotient covers {len(q.class_of)} vertices, graph has {n}")
    members = sorted(u for c in q.classes for u in c.members)
    if members != list(range(n)):
        return False
    for idx, c in enumerate(q.classes):
        if any(q.class_of[u] != idx for u in c.members):
            return False
        if any(g.neighbors(u) != g.neighbors(c.representative) for u in c.members):
            return False
    for i, ci in enumerate(q.classes):
        for j, cj in enumerate(q.classes):
            want = i != j and q.adjacent(i, j)
            for a in ci.members:
                for b in cj.members:
                    if a != b and g.has_edge(a, b) != want:
                        return False
    return True


def is_quotient_isomorphism(q1: QuotientGraph, q2: QuotientGraph, phi: Mapping[int, int]) -> bool:
    return is_isomorphism(q1.graph, q2.graph, phi)


def _support_index(q: QuotientGraph) -> dict[frozenset[int], int]:
    index = {}
    for idx, c in enumerate(q.classes):
        f = q.graph.label(idx)
        if not isinstance(f, RingElement):
            raise InputError("quotient classes must carry ring-element representatives")
        index[cozero_set(f)] = idx
    return index


def canonical_phi(
    cfg: ModelConfig,
    q1: QuotientGraph | None = None,
    q2: QuotientGraph | None = None,
) -> dict[int, int]:
    """Support-complement map from the zero-divisor quotient to the comaximal one.

    The class of ``f`` (elements with cozero set ``coz f``) goes to the class
    of elements supported exactly on ``Z(f)``.  Indices refer to
    :func:`build_quotient` of :func:`~zdgraphs.ring.build_graph`.
    """
    if cfg.n_points < 2:
        raise InputError("the quotient map needs |X| >= 2")
    if q1 is None:
        q1 = build_quotient(build_graph(cfg, GraphKind.ZERO_DIVISOR))
    if q2 is None:
        q2 = build_quotient(build_graph(cfg, GraphKind.COMAXIMAL))
    points = cfg.space.points
    target = _support_index(q2)
    return {
        idx: target[points - supp]
        for supp, idx in sorted(_support_index(q1).items(), key=lambda kv: kv[1])
    }


def class_size(q: QuotientGraph, idx: int) -> int:
    if not 0 <= idx < len(q.classes):
        raise InputError(f"class index {idx} out of range")
    return len(q.classes[idx].members)


def class_size_formula(cfg: ModelConfig, support_size: int) -> int:
    """Number of elements with a prescribed support of the given size."""
    if not 1 <= support_size <= cfg.n_points - 1:
        raise InputError(f"support size must lie in 1..{cfg.n_points - 1}, got {support_size}")
    return (cfg.alphabet_size - 1) ** support_size


@dataclass(frozen=True)
class LiftResult:
    """A lifted isomorphism, or the classes whose sizes block the lift.

    ``mismatches`` holds ``(class index, |class|, |image class|)`` triples.
    """

    mapping: dict[int, int] | None
    mismatches: tuple[tuple[int, int, int], ...] = ()
    verified: bool = False

    @property
    def ok(self) -> bool:
        return self.mapping is not None


def lift_isomorphism(
    g1: SimpleGraph,
    g2: SimpleGraph,
    phi: Mapping[int, int],
    q1: QuotientGraph | None = None,
    q2: QuotientGraph | None = None,
) -> LiftResult:
    """Assemble a vertex isomorphism from a size-preserving quotient isomorphism.

    Members of each class are paired with the members of its image in sorted
    order.  The lifted map is re-audited edge by edge before it is returned.
    """
    q1 = q1 if q1 is not None else build_quotient(g1)
    q2 = q2 if q2 is not None else build_quotient(g2)
    if not is_quotient_isomorphism(q1, q2, phi):
        raise InputError("phi is not an isomorphism of the quotient graphs")
    mismatches = tuple(
        (i, len(q1.classes[i]), len(q2.classes[phi[i]]))
        for i in range(len(q1.classes))
        if len(q1.classes[i]) != len(q2.classes[phi[i]])
    )
    if mismatches:
        return LiftResult(None, mismatches)
    psi: dict[int, int] = {}
    for i, c in enumerate(q1.classes):
        psi.update(zip(c.members, q2.classes[phi[i]].members))
    psi = dict(sorted(psi.items()))
    if not is_isomorphism(g1, g2, psi):
        raise AssertionError("size-preserving quotient isomorphism failed to lift")
    return LiftResult(psi, (), verified=True)


def _support_label(q: QuotientGraph, idx: int) -> str:
    f = q.graph.label(idx)
    if isinstance(f, RingElement):
        supp = ",".join(map(str, sorted(cozero_set(f))))
        return f"supp={{{supp}}}×{class_size(q, idx)}"
    return f"{f}×{class_size(q, idx)}"


def quotient_to_dot(q: QuotientGraph) -> str:
    from .graph import to_dot

    return to_dot(q.graph, label=lambda i: _support_label(q, i))


def class_table(q: QuotientGraph) -> list[dict]:
    rows = []
    for idx, c in enumerate(q.classes):
        f = q.graph.label(idx)
        rows.append(
            {
                "index": idx,
                "representative": f.to_json() if isinstance(f, RingElement) else f,
                "support": sorted(cozero_set(f)) if isinstance(f, RingElement) else None,
                "size": len(c),
                "members": list(c.members),
                "neighbors": sorted(q.graph.neighbors(idx)),
            }
        )
    return rows


def class_table_json(q: QuotientGraph) -> str:
    return json.dumps({"schema": 1, "classes": class_table(q)}, sort_keys=True, ensure_ascii=False, indent=2) + "\n"
