"""Closed-form predictions read off zero sets and their interiors.

Nothing in this module looks at a graph.  Each prediction is evaluated from
``Z(f)``, ``coz f`` and the interior hook of the underlying space, and
reports which clause fired so a mismatch against the graph oracles names the
exact rule at fault.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, UnsupportedDomainError
from .ring import (
    ElementKind,
    FiniteSpace,
    GraphKind,
    ModelConfig,
    RingElement,
    classify,
    cozero_set,
    zero_set,
)

__all__ = [
    "Prediction",
    "DistancePrediction",
    "predict_distance_zd",
    "predict_distance_comax",
    "predict_eccentricity_zd",
    "predict_cycle_zd",
    "predict_cycle_comax",
    "in_triangle_zd",
    "in_triangle_comax",
    "orthogonal_zd",
    "complement_witness_zd",
    "complement_witness_comax",
    "has_isolated_point",
    "is_p_space",
    "predict_complemented",
    "predict_triangulated",
    "predict_hypertriangulated",
    "predict_diameter_zd",
    "predict_girth_zd",
    "predict_diameter_comax",
    "predict_comax_radius_three",
]


@dataclass(frozen=True)
class Prediction:
    value: int
    rule_fired: str


DistancePrediction = Prediction


def _space(f: RingElement) -> FiniteSpace:
    return FiniteSpace(f.size)


def _vertex(*fs: RingElement) -> None:
    for f in fs:
        if classify(f) is not ElementKind.VERTEX:
            raise InputError(f"{f} is not a vertex (it is {classify(f).value})")
    first = fs[0]
    for f in fs[1:]:
        if f.size != first.size or f.alphabet_size != first.alphabet_size:
            raise InputError(f"elements {first} and {f} come from different models")


def _pair(f: RingElement, g: RingElement):
    _vertex(f, g)
    if f == g:
        raise InputError("the prediction needs two distinct vertices")
    space = _space(f)
    zf, zg = zero_set(f), zero_set(g)
    covers = (zf | zg) == space.points
    interiors_meet = bool(space.interior(zf) & space.interior(zg))
    return zf, zg, covers, interiors_meet


def predict_distance_zd(f: RingElement, g: RingElement) -> Prediction:
    """Distance in the zero-divisor graph."""
    _, _, covers, meet = _pair(f, g)
    if covers:
        return Prediction(1, "zd-distance:zero-sets-cover")
    if meet:
        return Prediction(2, "zd-distance:interiors-meet")
    return Prediction(3, "zd-distance:interiors-disjoint")


def predict_distance_comax(f: RingElement, g: RingElement) -> Prediction:
    """Distance in the comaximal graph."""
    zf, zg, covers, _ = _pair(f, g)
    if not (zf & zg):
        return Prediction(1, "comax-distance:zero-sets-disjoint")
    if not covers:
        return Prediction(2, "comax-distance:meet-without-cover")
    return Prediction(3, "comax-distance:meet-and-cover")


def predict_eccentricity_zd(f: RingElement) -> int:
    """2 when ``f`` is nonzero at exactly one point, otherwise 3 (needs ``|X| >= 3``)."""
    _vertex(f)
    if f.size < 3:
        raise UnsupportedDomainError(
            f"eccentricity formula is only asserted for |X| >= 3, got |X| = {f.size}"
        )
    return 2 if len(cozero_set(f)) == 1 else 3


def predict_cycle_zd(f: RingElement, g: RingElement) -> Prediction:
    """Shortest cycle through ``f`` and ``g`` in the zero-divisor graph.

    Exact in models with ``a >= 3``; binary models lack the second function
    with a given zero set that the longer cycles route through.
    """
    _, _, covers, meet = _pair(f, g)
    if covers and meet:
        return Prediction(3, "zd-cycle:cover-interiors-meet")
    if not covers and meet:
        return Prediction(4, "zd-cycle:no-cover-interiors-meet")
    if covers:
        return Prediction(4, "zd-cycle:cover-interiors-disjoint")
    return Prediction(6, "zd-cycle:no-cover-interiors-disjoint")


def predict_cycle_comax(f: RingElement, g: RingElement) -> Prediction:
    """Shortest cycle through ``f`` and ``g`` in the comaximal graph (exact for ``a >= 3``)."""
    zf, zg, covers, _ = _pair(f, g)
    if not (zf & zg):
        if covers:
            return Prediction(4, "comax-cycle:disjoint-cover")
        return Prediction(3, "comax-cycle:disjoint-no-cover")
    if covers:
        return Prediction(6, "comax-cycle:meet-cover")
    return Prediction(4, "comax-cycle:meet-no-cover")


def in_triangle_zd(f: RingElement) -> bool:
    _vertex(f)
    return len(_space(f).interior(zero_set(f))) >= 2


def in_triangle_comax(f: RingElement) -> bool:
    _vertex(f)
    return len(cozero_set(f)) >= 2


def orthogonal_zd(f: RingElement, g: RingElement) -> bool:
    """Zero sets cover ``X`` while their interiors are disjoint."""
    _vertex(f, g)
    space = _space(f)
    zf, zg = zero_set(f), zero_set(g)
    return (zf | zg) == space.points and not (space.interior(zf) & space.interior(zg))


def _indicator(f: RingElement, subset) -> RingElement:
    return RingElement(tuple(1 if i in subset else 0 for i in range(f.size)), f.alphabet_size)


def complement_witness_zd(f: RingElement) -> RingElement:
    """The characteristic function of ``Z(f)``."""
    _vertex(f)
    return _indicator(f, zero_set(f))


def complement_witness_comax(f: RingElement) -> RingElement:
    # Z(f) is clopen, so its indicator has zero set coz f.
    _vertex(f)
    return _indicator(f, zero_set(f))


def _proper_nonempty_subsets(space: FiniteSpace):
    pts = sorted(space.points)
    for r in range(1, len(pts)):
        for c in combinations(pts, r):
            yield frozenset(c)


def has_isolated_point(space: FiniteSpace) -> bool:
    return any(space.interior({p}) == {p} for p in space.points)


def is_p_space(space: FiniteSpace) -> bool:
    # every subset of a finite discrete space is a zero set; P means each is open
    return all(space.interior(z) == z for z in _proper_nonempty_subsets(space))


def predict_complemented(cfg: ModelConfig, kind: GraphKind | str) -> bool:
    """Complementedness predicted from the topology alone.

    Comaximal: the space is a P-space.  Zero-divisor: every admissible zero
    set ``Z`` has a partner zero set ``W = X \\ int Z`` that, together with
    ``Z``, covers ``X`` with disjoint interiors.
    """
    kind = GraphKind(kind)
    space = cfg.space
    if kind is GraphKind.COMAXIMAL:
        return is_p_space(space)
    for z in _proper_nonempty_subsets(space):
        w = space.points - space.interior(z)
        if not w or w == space.points:
            return False
        if (z | w) != space.points or space.interior(z) & space.interior(w):
            return False
    return True


def predict_triangulated(cfg: ModelConfig, kind: GraphKind | str) -> bool:
    GraphKind(kind)
    return not has_isolated_point(cfg.space)


def predict_hypertriangulated(cfg: ModelConfig, kind: GraphKind | str) -> bool:
    # a nontrivial clopen K gives the edge 1_K ~ 1_{X-K} with no common neighbour
    GraphKind(kind)
    return False


def predict_diameter_zd(cfg: ModelConfig) -> int:
    if cfg.n_points < 3:
        raise UnsupportedDomainError("zero-divisor diameter formula needs |X| >= 3")
    return 3


def predict_girth_zd(cfg: ModelConfig) -> int:
    if cfg.n_points < 3:
        raise UnsupportedDomainError("zero-divisor girth formula needs |X| >= 3")
    return 3


def predict_diameter_comax(cfg: ModelConfig) -> int:
    if cfg.n_points < 2:
        raise UnsupportedDomainError("the comaximal graph of a one-point space is empty")
    return 3 if cfg.n_points >= 3 else 2


def predict_comax_radius_three(cfg: ModelConfig) -> bool:
    """Radius 3 needs an almost P-space without isolated points.

    A finite discrete space always has isolated points, so this is ``False``
    for every finite model.
    """
    return not has_isolated_point(cfg.space)
