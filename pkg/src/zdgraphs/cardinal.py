"""Symbolic cardinals for the counting arguments over uncountable discrete spaces.

Only four kinds of cardinal occur: finite numbers, aleph-null, the continuum
``c`` and ``2^c``.  The continuum hypothesis is built in, which fixes
``c^n = c^aleph0 = c`` and ``c^c = 2^c > c``.  Anything outside that
fragment raises :class:`~zdgraphs.errors.UnsupportedCardinalError` rather
than being coerced.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import AmbiguityError, InputError, UnsupportedCardinalError

__all__ = [
    "ASSUMPTION",
    "Cardinal",
    "finite",
    "ALEPH0",
    "CONTINUUM",
    "TWO_TO_C",
    "power",
    "complement",
    "class_size_condition",
    "NonIsoCertificate",
    "noniso_certificate",
    "Verdict",
    "verdict",
]

ASSUMPTION = "CH"

_RANK = {"finite": 0, "aleph0": 1, "continuum": 2, "2^c": 3}


@functools.total_ordering
@dataclass(frozen=True)
class Cardinal:
    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _RANK:
            raise UnsupportedCardinalError(f"unknown cardinal kind {self.kind!r}")
        if self.kind == "finite" and self.n < 0:
            raise InputError(f"finite cardinal must be >= 0, got {self.n}")
        if self.kind != "finite" and self.n != 0:
            raise InputError("only finite cardinals carry a count")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __lt__(self, other: "Cardinal") -> bool:
        if not isinstance(other, Cardinal):
            return NotImplemented
        return (_RANK[self.kind], self.n) < (_RANK[other.kind], other.n)

    def __pow__(self, exp: "Cardinal") -> "Cardinal":
        return power(self, exp)

    def __str__(self) -> str:
        if self.is_finite:
            return str(self.n)
        return {"aleph0": "aleph0", "continuum": "c", "2^c": "2^c"}[self.kind]

    def __repr__(self) -> str:
        if self.is_finite:
            return f"Finite({self.n})"
        return {"aleph0": "Aleph0", "continuum": "Continuum", "2^c": "TwoToC"}[self.kind]

    @classmethod
    def parse(cls, text: str) -> "Cardinal":
        """``finite:<n>``, ``aleph0``, ``continuum`` or ``2^c``."""
        t = text.strip().lower()
        if t.startswith("finite:"):
            try:
                return finite(int(t.split(":", 1)[1]))
            except ValueError:
                raise InputError(f"bad finite cardinal {text!r}") from None
        aliases = {"aleph0": ALEPH0, "c": CONTINUUM, "continuum": CONTINUUM, "2^c": TWO_TO_C}
        if t in aliases:
            return aliases[t]
        raise InputError(f"cannot parse cardinal {text!r}")


def finite(n: int) -> Cardinal:
    return Cardinal("finite", n)


ALEPH0 = Cardinal("aleph0")
CONTINUUM = Cardinal("continuum")
TWO_TO_C = Cardinal("2^c")


def power(base: Cardinal, exp: Cardinal) -> Cardinal:
    if base.is_finite and exp.is_finite:
        return finite(base.n**exp.n)
    if base == CONTINUUM:
        if exp.is_finite and exp.n >= 1:
            return CONTINUUM
        if exp == ALEPH0:
            return CONTINUUM
        if exp == CONTINUUM:
            return TWO_TO_C
    raise UnsupportedCardinalError(f"{base!r} ** {exp!r} is outside the supported fragment")


def complement(x: Cardinal, z: Cardinal) -> Cardinal:
    """Size of ``X - Z`` from ``|X|`` and ``|Z|`` where that is determined."""
    if z > x:
        raise InputError(f"subset cardinal {z!r} exceeds {x!r}")
    if x.is_finite:
        return finite(x.n - z.n)
    if z < x:
        return x
    raise AmbiguityError(f"|X - Z| is not determined when |Z| = |X| = {x!r}")


def class_size_condition(x_card: Cardinal, zf_card: Cardinal) -> bool:
    """``c^|Z(f)| == c^|X - Z(f)|`` for a function with ``|Z(f)| = zf_card``.

    Empty and full zero sets belong to units and to ``0``, which are not
    vertices, so the condition holds vacuously there.
    """
    if zf_card > x_card:
        raise InputError(f"zero set cardinal {zf_card!r} exceeds {x_card!r}")
    if zf_card == finite(0) or (x_card.is_finite and zf_card == x_card):
        return True
    return power(CONTINUUM, zf_card) == power(CONTINUUM, complement(x_card, zf_card))


@dataclass(frozen=True)
class NonIsoCertificate:
    """Degree obstruction for a vertex ``f`` whose zero set is one point.

    ``zd_neighborhood`` is the number of neighbours of ``f`` in the
    zero-divisor graph; ``comax_neighborhood_at_least`` bounds from below the
    neighbourhood of any candidate image in the comaximal graph.
    """

    x_card: Cardinal
    zero_set_card: Cardinal
    zd_class_size: Cardinal
    zd_neighborhood: Cardinal
    comax_neighborhood_at_least: Cardinal
    assumption: str = ASSUMPTION

    @property
    def pair(self) -> tuple[Cardinal, Cardinal]:
        return self.zd_neighborhood, self.comax_neighborhood_at_least


def noniso_certificate(x_card: Cardinal) -> NonIsoCertificate | None:
    if x_card.is_finite or x_card < CONTINUUM:
        return None
    z = finite(1)
    # neighbours of f are the functions supported on the single zero of f
    zd_nbhd = power(CONTINUUM, z)
    # the twin class of f has c^|X - Z(f)| members; 2^c is not a valid
    # exponent here, and c^|X - Z(f)| >= c^c already decides the bound
    rest = min(complement(x_card, z), CONTINUUM)
    class_size = power(CONTINUUM, rest)
    if class_size <= CONTINUUM:
        return None
    # an image with a twin class that large has at least c points off its
    # zero set, hence at least c^c comaximal neighbours
    comax_bound = power(CONTINUUM, CONTINUUM)
    if not comax_bound > zd_nbhd:
        return None
    return NonIsoCertificate(x_card, z, class_size, zd_nbhd, comax_bound)


@dataclass(frozen=True)
class Verdict:
    x_card: Cardinal
    isomorphic: bool
    certificate: NonIsoCertificate | None
    note: str
    assumption: str = ASSUMPTION

    def to_json(self) -> dict:
        cert = None
        if self.certificate is not None:
            c = self.certificate
            cert = {
                "zero_set": str(c.zero_set_card),
                "zd_class_size": str(c.zd_class_size),
                "zd_neighborhood": str(c.zd_neighborhood),
                "comax_neighborhood_at_least": str(c.comax_neighborhood_at_least),
            }
        return {
            "assumption": self.assumption,
            "x": str(self.x_card),
            "isomorphic": self.isomorphic,
            "certificate": cert,
            "note": self.note,
        }


def verdict(x_card: Cardinal) -> Verdict:
    """Whether the real-valued graphs over a discrete space of this size are isomorphic."""
    cert = noniso_certificate(x_card)
    if cert is not None:
        return Verdict(x_card, False, cert, "a one-point zero set has c neighbours in the zero-divisor graph but any image has at least 2^c")
    if x_card.is_finite:
        note = (
            "twin classes all have size c, so the quotient map lifts; "
            "finite-alphabet models of a finite space are decided by explicit search"
        )
    else:
        note = "twin classes all have size c, so the quotient map lifts"
    return Verdict(x_card, True, None, note)
