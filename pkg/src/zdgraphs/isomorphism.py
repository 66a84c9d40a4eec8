"""Exact graph isomorphism search by backtracking.

Instances here are small (a few hundred vertices at most), so the search is
a plain depth-first extension of a partial map, pruned by degree and by the
sorted degrees of each vertex's neighbours.  Results depend only on vertex
order, never on hashing.
"""

from __future__ import annotations

from collections import Counter
from typing import Mapping

from .errors import InputError, ResourceError
from .graph import SimpleGraph

__all__ = ["ISOMORPHISM_CAP", "degree_multiset", "find_isomorphism", "is_isomorphism"]

ISOMORPHISM_CAP = 200


def degree_multiset(g: SimpleGraph) -> dict[int, int]:
    """``{degree: number of vertices with that degree}``, keys ascending."""
    return dict(sorted(Counter(g.degrees()).items()))


def is_isomorphism(g1: SimpleGraph, g2: SimpleGraph, psi: Mapping[int, int]) -> bool:
    """Exhaustive audit: ``psi`` is a bijection and ``u~v  <=>  psi(u)~psi(v)``."""
    n = g1.vertex_count
    if n != g2.vertex_count or sorted(psi) != list(range(n)):
        return False
    if sorted(psi.values()) != list(range(n)):
        return False
    a1, a2 = g1.adjacency_matrix, g2.adjacency_matrix
    perm = [psi[u] for u in range(n)]
    return bool((a1 == a2[perm][:, perm]).all())


def _signature(g: SimpleGraph) -> list[tuple[int, tuple[int, ...]]]:
    deg = g.degrees()
    return [(deg[u], tuple(sorted(deg[w] for w in g.neighbors(u)))) for u in range(g.vertex_count)]


def find_isomorphism(
    g1: SimpleGraph, g2: SimpleGraph, cap: int = ISOMORPHISM_CAP
) -> dict[int, int] | None:
    """A vertex bijection preserving adjacency both ways, or ``None``."""
    if g1.vertex_count == 0 or g2.vertex_count == 0:
        raise InputError("isomorphism search needs nonempty graphs")
    if max(g1.vertex_count, g2.vertex_count) > cap:
        raise ResourceError(f"graphs exceed the isomorphism cap of {cap} vertices")
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    sig1, sig2 = _signature(g1), _signature(g2)
    if Counter(sig1) != Counter(sig2):
        return None

    candidates = {s: [v for v in range(n) if sig2[v] == s] for s in set(sig1)}

    # Visit g1 in BFS order from the most constrained vertex so every step
    # after the first usually has an already-mapped neighbour.
    order: list[int] = []
    seen: set[int] = set()
    by_rarity = sorted(range(n), key=lambda u: (len(candidates[sig1[u]]), -sig1[u][0], u))
    for start in by_rarity:
        if start in seen:
            continue
        seen.add(start)
        frontier = [start]
        while frontier:
            order.extend(frontier)
            nxt = []
            for x in frontier:
                for y in sorted(g1.neighbors(x)):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt

    nb1 = [g1.neighbors(u) for u in range(n)]
    nb2 = [g2.neighbors(v) for v in range(n)]
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        mapped_nbrs = [mapping[w] for w in nb1[u] if w in mapping]
        mapped_non = [mapping[w] for w in mapping if w not in nb1[u]]
        if mapped_nbrs:
            pool = sorted(set.intersection(*(set(nb2[m]) for m in mapped_nbrs)) - used)
        else:
            pool = [v for v in candidates[sig1[u]] if v not in used]
        for v in pool:
            if sig2[v] != sig1[u]:
                continue
            if any(m in nb2[v] for m in mapped_non):
                continue
            mapping[u] = v
            used.add(v)
            if extend(i + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    if not extend(0):
        return None
    return dict(sorted(mapping.items()))
