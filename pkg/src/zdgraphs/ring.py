"""Finite models of rings of functions on a finite discrete space.

A point set ``X = {0, ..., n-1}`` carries the discrete topology, so every
subset is clopen and the interior operator is the identity.  Ring elements
are value tuples over the alphabet ``{0, ..., a-1}`` with ``0`` playing the
ring zero.  In ``"support"`` mode only the zero pattern of an element
matters; in ``"field"`` mode ``a`` is prime and elements multiply pointwise
in ``Z/aZ``, giving the genuine ring ``(Z/aZ)^n``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Iterator, Sequence

from .errors import InputError, ResourceError, UnsupportedModeError
from .graph import SimpleGraph

__all__ = [
    "ENUMERATION_CAP",
    "FiniteSpace",
    "RingElement",
    "ModelConfig",
    "GraphKind",
    "ElementKind",
    "is_prime",
    "zero_set",
    "cozero_set",
    "support_mask",
    "classify",
    "adjacent_zero_divisor",
    "adjacent_comaximal",
    "multiply",
    "add",
    "elements",
    "vertices",
    "build_graph",
    "characteristic_function",
    "vertex_count_formula",
]

ENUMERATION_CAP = 100_000


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    return all(k % d for d in range(2, int(k**0.5) + 1))


@dataclass(frozen=True)
class FiniteSpace:
    """Discrete space on points ``0 .. size-1``."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InputError(f"a space needs at least one point, got size={self.size}")

    @property
    def points(self) -> frozenset[int]:
        return frozenset(range(self.size))

    def interior(self, subset: AbstractSet[int]) -> frozenset[int]:
        # Every subset of a discrete space is open.  A non-discrete model
        # would replace this hook.
        return frozenset(subset)

    def check_subset(self, subset: Iterable[int]) -> frozenset[int]:
        s = frozenset(subset)
        bad = sorted(p for p in s if not (isinstance(p, int) and 0 <= p < self.size))
        if bad:
            raise InputError(f"points {bad} lie outside X = {{0..{self.size - 1}}}")
        return s


@dataclass(frozen=True, order=True)
class RingElement:
    """A function ``X -> {0, ..., alphabet_size - 1}`` stored as a value tuple."""

    values: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.alphabet_size < 2:
            raise InputError(f"alphabet size must be >= 2, got {self.alphabet_size}")
        if not self.values:
            raise InputError("an element needs at least one coordinate")
        for v in self.values:
            if not 0 <= v < self.alphabet_size:
                raise InputError(
                    f"value {v} outside alphabet 0..{self.alphabet_size - 1}"
                )

    @property
    def size(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"

    def to_json(self) -> list[int]:
        return list(self.values)


class GraphKind(str, enum.Enum):
    ZERO_DIVISOR = "zero-divisor"
    COMAXIMAL = "comaximal"


class ElementKind(str, enum.Enum):
    ZERO = "zero"
    UNIT = "unit"
    VERTEX = "zero-divisor-vertex"


_SPEC_RE = re.compile(r"^\s*X\s*=\s*(\d+)\s*,\s*a\s*=\s*(\d+)\s*(?:,\s*mode\s*=\s*(\w+)\s*)?$")


@dataclass(frozen=True)
class ModelConfig:
    """A finite discrete space, an alphabet size and an arithmetic mode."""

    space: FiniteSpace
    alphabet_size: int
    mode: str = "support"

    def __post_init__(self) -> None:
        if self.mode not in ("support", "field"):
            raise InputError(f"mode must be 'support' or 'field', got {self.mode!r}")
        if self.alphabet_size < 2:
            raise InputError(f"alphabet size must be >= 2, got {self.alphabet_size}")
        if self.mode == "field" and not is_prime(self.alphabet_size):
            raise InputError(f"field mode needs a prime alphabet size, got {self.alphabet_size}")

    @classmethod
    def of(cls, n_points: int, alphabet_size: int, mode: str = "support") -> "ModelConfig":
        return cls(FiniteSpace(n_points), alphabet_size, mode)

    @classmethod
    def parse(cls, text: str) -> "ModelConfig":
        """Parse ``X=<n>,a=<k>[,mode=<support|field>]``."""
        m = _SPEC_RE.match(text)
        if m is None:
            raise InputError(f"cannot parse model spec {text!r}; expected X=<n>,a=<k>,mode=<support|field>")
        n, a, mode = int(m.group(1)), int(m.group(2)), m.group(3) or "support"
        return cls.of(n, a, mode)

    def __str__(self) -> str:
        return f"X={self.n_points},a={self.alphabet_size},mode={self.mode}"

    @property
    def n_points(self) -> int:
        return self.space.size

    @property
    def is_field(self) -> bool:
        return self.mode == "field"

    def require_field(self) -> None:
        if not self.is_field:
            raise UnsupportedModeError(f"{self} uses support semantics; prime-field mode is required")

    def element(self, values: Sequence[int]) -> RingElement:
        f = RingElement(tuple(values), self.alphabet_size)
        self.check(f)
        return f

    def check(self, *fs: RingElement) -> None:
        for f in fs:
            if f.alphabet_size != self.alphabet_size or f.size != self.n_points:
                raise InputError(f"element {f} does not belong to model {self}")

    @property
    def zero(self) -> RingElement:
        return RingElement((0,) * self.n_points, self.alphabet_size)

    @property
    def one(self) -> RingElement:
        return RingElement((1,) * self.n_points, self.alphabet_size)

    def to_json(self) -> dict:
        return {"X": self.n_points, "a": self.alphabet_size, "mode": self.mode}


def zero_set(f: RingElement) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(f.values) if v == 0)


def cozero_set(f: RingElement) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(f.values) if v != 0)


def support_mask(f: RingElement) -> int:
    """Cozero set as a bit mask, bit ``i`` set iff ``f(i) != 0``."""
    m = 0
    for i, v in enumerate(f.values):
        if v:
            m |= 1 << i
    return m


def classify(f: RingElement) -> ElementKind:
    zeros = sum(1 for v in f.values if v == 0)
    if zeros == f.size:
        return ElementKind.ZERO
    if zeros == 0:
        return ElementKind.UNIT
    return ElementKind.VERTEX


def _same_model(f: RingElement, g: RingElement) -> None:
    if f.alphabet_size != g.alphabet_size or f.size != g.size:
        raise InputError(f"elements {f} and {g} come from different models")


def adjacent_zero_divisor(f: RingElement, g: RingElement) -> bool:
    """``fg = 0``: the cozero sets are disjoint."""
    _same_model(f, g)
    return not (support_mask(f) & support_mask(g))


def adjacent_comaximal(f: RingElement, g: RingElement) -> bool:
    """No maximal ideal contains both: the zero sets are disjoint."""
    _same_model(f, g)
    return support_mask(f) | support_mask(g) == (1 << f.size) - 1


def multiply(f: RingElement, g: RingElement) -> RingElement:
    """Pointwise product in ``Z/aZ`` (meaningful as a field product for prime ``a``)."""
    _same_model(f, g)
    a = f.alphabet_size
    return RingElement(tuple(x * y % a for x, y in zip(f.values, g.values)), a)


def add(f: RingElement, g: RingElement) -> RingElement:
    _same_model(f, g)
    a = f.alphabet_size
    return RingElement(tuple((x + y) % a for x, y in zip(f.values, g.values)), a)


def _check_cap(cfg: ModelConfig, cap: int) -> None:
    total = cfg.alphabet_size**cfg.n_points
    if total > cap:
        raise ResourceError(
            f"{cfg} has {total} elements, above the enumeration cap of {cap}"
        )


def elements(cfg: ModelConfig, cap: int = ENUMERATION_CAP) -> Iterator[RingElement]:
    """Every element of the model, in lexicographic order of value tuples."""
    _check_cap(cfg, cap)
    a = cfg.alphabet_size
    for values in itertools.product(range(a), repeat=cfg.n_points):
        yield RingElement(values, a)


def vertices(cfg: ModelConfig, cap: int = ENUMERATION_CAP) -> list[RingElement]:
    return [f for f in elements(cfg, cap) if classify(f) is ElementKind.VERTEX]


def vertex_count_formula(cfg: ModelConfig) -> int:
    a, n = cfg.alphabet_size, cfg.n_points
    return a**n - (a - 1) ** n - 1


def build_graph(
    cfg: ModelConfig, kind: GraphKind | str, cap: int = ENUMERATION_CAP
) -> SimpleGraph:
    """Zero-divisor or comaximal graph of the model, labelled by ring elements.

    Vertices are the nonzero non-units in lexicographic order; in a finite
    discrete model these are exactly the nonzero zero divisors, so both
    kinds share one vertex list.
    """
    kind = GraphKind(kind)
    verts = vertices(cfg, cap)
    full = (1 << cfg.n_points) - 1
    by_mask: dict[int, list[int]] = {}
    for i, f in enumerate(verts):
        by_mask.setdefault(support_mask(f), []).append(i)
    masks = sorted(by_mask)
    edges = []
    for i, m1 in enumerate(masks):
        for m2 in masks[i:]:
            if kind is GraphKind.ZERO_DIVISOR:
                linked = not (m1 & m2)
            else:
                linked = (m1 | m2) == full
            if not linked:
                continue
            # an element is never adjacent to itself: in both kinds m1 == m2
            # would force an empty or full support
            edges.extend(itertools.product(by_mask[m1], by_mask[m2]))
    return SimpleGraph(len(verts), edges, labels=verts)


def characteristic_function(cfg: ModelConfig, subset: Iterable[int]) -> RingElement:
    """Value 1 on ``subset`` and 0 elsewhere."""
    s = cfg.space.check_subset(subset)
    return RingElement(tuple(1 if i in s else 0 for i in range(cfg.n_points)), cfg.alphabet_size)
