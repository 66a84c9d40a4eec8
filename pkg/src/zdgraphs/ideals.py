"""Annihilators, hulls and kernels in the ring ``(Z/pZ)^n``.

Ideals are materialised as explicit element sets, so every identity is
checked by enumeration.  The ring is a finite product of fields: its prime
ideals are the point ideals ``M_p = {f : f(p) = 0}``, which are at once
minimal and maximal.  :meth:`FieldModel.prime_ideals_bruteforce` recovers
them from the definition of primality rather than assuming it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

from .errors import InputError
from .ring import (
    ModelConfig,
    RingElement,
    add,
    characteristic_function,
    cozero_set,
    multiply,
    support_mask,
    zero_set,
)

__all__ = [
    "IdealSet",
    "MinimalPrime",
    "FieldModel",
    "field_model",
    "annihilator",
    "minimal_primes",
    "hull",
    "kernel",
    "IdentityCheck",
    "IdentityReport",
    "check_hull_kernel_identities",
    "ACResult",
    "check_ac_condition",
    "CompactnessResult",
    "is_min_prime_space_compact",
    "hull_annihilator_clauses",
    "PrincipalResult",
    "is_principal_maximal",
]


@dataclass(frozen=True)
class IdealSet:
    elements: frozenset[RingElement]
    generated_by: tuple[RingElement, ...] | None = None

    def __contains__(self, f: object) -> bool:
        return f in self.elements

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True, order=True)
class MinimalPrime:
    point: int
    elements: frozenset[RingElement] = field(compare=False, repr=False)


class FieldModel:
    """The ring ``(Z/pZ)^n`` of a field-mode :class:`~zdgraphs.ring.ModelConfig`."""

    def __init__(self, cfg: ModelConfig) -> None:
        cfg.require_field()
        self.cfg = cfg
        a, n = cfg.alphabet_size, cfg.n_points
        self.elements: tuple[RingElement, ...] = tuple(
            RingElement(tuple((k // a**(n - 1 - i)) % a for i in range(n)), a)
            for k in range(a**n)
        )
        self.all: frozenset[RingElement] = frozenset(self.elements)
        self._full = (1 << n) - 1

    def _check(self, fs: Iterable[RingElement]) -> frozenset[RingElement]:
        s = frozenset(fs)
        for f in s:
            self.cfg.check(f)
        return s

    # -- ideals --------------------------------------------------------------

    def annihilator(self, S: Iterable[RingElement]) -> IdealSet:
        """``{f : supp f ⊆ common zero set of S}``."""
        S = self._check(S)
        common = self._full
        for g in S:
            common &= ~support_mask(g)
        return IdealSet(frozenset(f for f in self.elements if support_mask(f) & ~common == 0))

    def annihilator_bruteforce(self, S: Iterable[RingElement]) -> frozenset[RingElement]:
        S = self._check(S)
        zero = self.cfg.zero
        return frozenset(f for f in self.elements if all(multiply(f, g) == zero for g in S))

    def principal_ideal(self, f: RingElement) -> IdealSet:
        self.cfg.check(f)
        return IdealSet(frozenset(multiply(r, f) for r in self.elements), (f,))

    def is_ideal(self, S: Iterable[RingElement]) -> bool:
        S = frozenset(S)
        if self.cfg.zero not in S:
            return False
        return all(add(x, y) in S for x in S for y in S) and all(
            multiply(r, x) in S for r in self.elements for x in S
        )

    @cached_property
    def ideals(self) -> tuple[IdealSet, ...]:
        """Every ideal; the ring is a principal ideal ring so generators suffice."""
        seen: dict[frozenset, IdealSet] = {}
        for f in self.elements:
            I = self.principal_ideal(f)
            seen.setdefault(I.elements, I)
        return tuple(sorted(seen.values(), key=lambda I: (len(I), sorted(I.elements))))

    def prime_ideals_bruteforce(self) -> list[frozenset[RingElement]]:
        """Proper ideals ``P`` with ``xy ∈ P  =>  x ∈ P or y ∈ P``."""
        primes = []
        for I in self.ideals:
            P = I.elements
            if P == self.all:
                continue
            if all(
                x in P or y in P
                for x in self.elements
                for y in self.elements
                if multiply(x, y) in P
            ):
                primes.append(P)
        return primes

    def minimal_primes_bruteforce(self) -> list[frozenset[RingElement]]:
        primes = self.prime_ideals_bruteforce()
        return [P for P in primes if not any(Q < P for Q in primes)]

    @cached_property
    def minimal_primes(self) -> tuple[MinimalPrime, ...]:
        return tuple(
            MinimalPrime(p, frozenset(f for f in self.elements if f.values[p] == 0))
            for p in range(self.cfg.n_points)
        )

    # -- hull and kernel -------------------------------------------------------

    def hull(self, S: Iterable[RingElement] | RingElement) -> frozenset[MinimalPrime]:
        if isinstance(S, RingElement):
            S = (S,)
        S = self._check(S)
        return frozenset(P for P in self.minimal_primes if S <= P.elements)

    def kernel(self, primes: Iterable[MinimalPrime]) -> frozenset[RingElement]:
        out = self.all
        for P in primes:
            out = out & P.elements
        return out


@lru_cache(maxsize=32)
def field_model(cfg: ModelConfig) -> FieldModel:
    return FieldModel(cfg)


def annihilator(cfg: ModelConfig, S: Iterable[RingElement]) -> IdealSet:
    return field_model(cfg).annihilator(S)


def minimal_primes(cfg: ModelConfig) -> tuple[MinimalPrime, ...]:
    return field_model(cfg).minimal_primes


def hull(cfg: ModelConfig, S: Iterable[RingElement] | RingElement) -> frozenset[MinimalPrime]:
    return field_model(cfg).hull(S)


def kernel(cfg: ModelConfig, primes: Iterable[MinimalPrime]) -> frozenset[RingElement]:
    return field_model(cfg).kernel(primes)


# -- identity suite ------------------------------------------------------------


@dataclass
class IdentityCheck:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None

    def to_json(self) -> dict:
        return {"passed": self.passed, "cases": self.cases, "counterexample": self.counterexample}


@dataclass
class IdentityReport:
    model: ModelConfig
    checks: list[IdentityCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> str:
        doc = {
            "schema": 1,
            "model": self.model.to_json(),
            "identities": {c.name: c.to_json() for c in self.checks},
        }
        return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _fmt(*objs) -> str:
    def one(o):
        if isinstance(o, RingElement):
            return str(o)
        if isinstance(o, MinimalPrime):
            return f"M{o.point}"
        if isinstance(o, (frozenset, set, tuple, list)):
            return "{" + ",".join(sorted(one(x) for x in o)) + "}"
        return str(o)

    return "; ".join(one(o) for o in objs)


def _run(name: str, cases: Iterable, predicate) -> IdentityCheck:
    count = 0
    for case in cases:
        count += 1
        if not predicate(*case):
            return IdentityCheck(name, False, count, _fmt(*case))
    return IdentityCheck(name, True, count)


def check_hull_kernel_identities(cfg: ModelConfig) -> IdentityReport:
    """Exhaustively verify the hull/kernel/annihilator identities on the model.

    Sets ``S`` range over every ideal, every singleton and every pair of
    elements; families of primes range over all subfamilies; element
    identities run over all elements, pairs and triples.
    """
    R = field_model(cfg)
    els = R.elements
    P_all = frozenset(R.minimal_primes)
    ideals = [I.elements for I in R.ideals]
    small = [frozenset({f}) for f in els] + [frozenset(c) for c in combinations(els, 2)]
    sets = list(dict.fromkeys(ideals + small))
    families = [
        frozenset(c) for r in range(len(P_all) + 1) for c in combinations(sorted(P_all), r)
    ]

    h_cache: dict[frozenset, frozenset] = {}

    def h(S: frozenset) -> frozenset:
        if S not in h_cache:
            h_cache[S] = R.hull(S)
        return h_cache[S]

    ann = {f: R.annihilator((f,)).elements for f in els}
    hf = {f: R.hull(f) for f in els}
    h_ann = {f: h(ann[f]) for f in els}
    space = cfg.space
    X = space.points

    checks = [
        _run(
            "minimal-primes-are-point-ideals",
            [(sorted(P.point for P in R.minimal_primes),)],
            lambda _: sorted(R.minimal_primes_bruteforce(), key=sorted)
            == sorted((P.elements for P in R.minimal_primes), key=sorted),
        ),
        _run(
            "annihilator-support-vs-products",
            ((S,) for S in sets),
            lambda S: R.annihilator(S).elements == R.annihilator_bruteforce(S),
        ),
        _run(
            "hull-reverses-inclusion",
            ((S1, S2) for S1 in sets for S2 in sets if S1 <= S2),
            lambda S1, S2: h(S1) >= h(S2),
        ),
        _run(
            "kernel-reverses-inclusion",
            ((F1, F2) for F1 in families for F2 in families if F1 <= F2),
            lambda F1, F2: R.kernel(F1) >= R.kernel(F2),
        ),
        _run(
            "hull-of-ideal-intersection",
            ((I, J) for I in ideals for J in ideals),
            lambda I, J: h(I & J) == h(I) | h(J),
        ),
        _run(
            "kernel-of-union",
            ((F1, F2) for F1 in families for F2 in families),
            lambda F1, F2: R.kernel(F1 | F2) == R.kernel(F1) & R.kernel(F2),
        ),
        _run(
            "hull-of-annihilator-is-complement",
            ((f,) for f in els),
            lambda f: h_ann[f] == P_all - hf[f],
        ),
        _run(
            "kernel-hull-fixes-annihilator",
            ((S,) for S in sets),
            lambda S: R.kernel(h(R.annihilator(S).elements)) == R.annihilator(S).elements,
        ),
        _run(
            "annihilator-meet-iff-hull-meet",
            ((f, g, l) for f in els for g in els for l in els),
            lambda f, g, l: (ann[l] == ann[f] & ann[g]) == (hf[l] == hf[f] & hf[g]),
        ),
        _run(
            "double-annihilator-iff-hull",
            ((f, g) for f in els for g in els),
            lambda f, g: (R.annihilator(ann[f]).elements == ann[g]) == (hf[f] == h_ann[g]),
        ),
        _run(
            "hull-annihilator-below-hull-iff-cover",
            ((f, g) for f in els for g in els),
            lambda f, g: (h_ann[f] <= hf[g]) == ((zero_set(f) | zero_set(g)) == X),
        ),
        _run(
            "hull-annihilator-above-hull-iff-interiors-disjoint",
            ((f, g) for f in els for g in els),
            lambda f, g: (h_ann[f] >= hf[g])
            == (not (space.interior(zero_set(f)) & space.interior(zero_set(g)))),
        ),
    ]
    ac = check_ac_condition(cfg)
    checks.append(
        IdentityCheck("annihilator-condition", ac.holds, len(ac.witnesses), ac.counterexample)
    )
    comp = is_min_prime_space_compact(cfg)
    checks.append(
        IdentityCheck("min-prime-space-compact", comp.compact, len(comp.witnesses), comp.counterexample)
    )
    principal = [is_principal_maximal(cfg, p) for p in range(cfg.n_points)]
    bad = next((r for r in principal if not r.principal), None)
    checks.append(
        IdentityCheck(
            "principal-maximal-ideals",
            bad is None,
            len(principal),
            None if bad is None else f"M{bad.point}",
        )
    )
    return IdentityReport(cfg, checks)


# -- a.c. condition, compactness, principal maximal ideals ---------------------


@dataclass
class ACResult:
    holds: bool
    witnesses: dict[tuple[RingElement, RingElement], RingElement]
    counterexample: str | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_ac_condition(cfg: ModelConfig) -> ACResult:
    """For every pair ``f, g`` find ``h`` with ``Ann(h) = Ann(f) ∩ Ann(g)``.

    The witness is the indicator of ``supp f ∪ supp g``.  The sum of squares
    used over the reals can vanish off the common zeros in ``Z/pZ``
    (``1 + 4 = 0`` mod 5), while the support union always has exactly the
    common zero set.
    """
    R = field_model(cfg)
    ann = {f: R.annihilator((f,)).elements for f in R.elements}
    witnesses = {}
    for f in R.elements:
        for g in R.elements:
            h = characteristic_function(cfg, cozero_set(f) | cozero_set(g))
            if R.annihilator((h,)).elements != ann[f] & ann[g]:
                return ACResult(False, witnesses, _fmt(f, g, h))
            witnesses[(f, g)] = h
    return ACResult(True, witnesses)


@dataclass
class CompactnessResult:
    compact: bool
    witnesses: dict[RingElement, RingElement]
    counterexample: str | None = None

    def __bool__(self) -> bool:
        return self.compact


def is_min_prime_space_compact(cfg: ModelConfig) -> CompactnessResult:
    """Witness criterion: each ``f`` has ``g`` with ``h(g) = h(Ann f)``.

    The candidate ``g`` is the indicator of ``Z(f)``; it is checked against
    the hulls computed from element sets.
    """
    R = field_model(cfg)
    witnesses = {}
    for f in R.elements:
        g = characteristic_function(cfg, zero_set(f))
        if R.hull(g) != R.hull(R.annihilator((f,)).elements):
            return CompactnessResult(False, witnesses, _fmt(f, g))
        witnesses[f] = g
    return CompactnessResult(True, witnesses)


def hull_annihilator_clauses(
    cfg: ModelConfig, f: RingElement, g: RingElement
) -> tuple[tuple[bool, bool], tuple[bool, bool]]:
    """Both sides of the two hull/zero-set equivalences for ``f`` and ``g``.

    Returns ``((h(Ann f) ⊆ h(g), Z(f) ∪ Z(g) = X),
    (h(Ann f) ⊇ h(g), int Z(f) ∩ int Z(g) = ∅))``.
    """
    R = field_model(cfg)
    h_ann = R.hull(R.annihilator((f,)).elements)
    hg = R.hull(g)
    zf, zg = zero_set(f), zero_set(g)
    space = cfg.space
    return (
        (h_ann <= hg, (zf | zg) == space.points),
        (h_ann >= hg, not (space.interior(zf) & space.interior(zg))),
    )


@dataclass(frozen=True)
class PrincipalResult:
    point: int
    principal: bool
    generator: RingElement | None

    def __bool__(self) -> bool:
        return self.principal


def is_principal_maximal(cfg: ModelConfig, p: int) -> PrincipalResult:
    """Whether ``M_p`` is principal; the candidate generator is ``1_{X - {p}}``.

    Every point of a finite discrete space is isolated, so the answer is
    always yes; it is still confirmed element for element.
    """
    if not (isinstance(p, int) and 0 <= p < cfg.n_points):
        raise InputError(f"point {p!r} is not in X = {{0..{cfg.n_points - 1}}}")
    R = field_model(cfg)
    gen = characteristic_function(cfg, cfg.space.points - {p})
    ok = R.principal_ideal(gen).elements == R.minimal_primes[p].elements
    return PrincipalResult(p, ok, gen if ok else None)
