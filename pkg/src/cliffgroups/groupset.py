"""Finite sets of signed blades, their products and unions, and group closure."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .blade import DimensionError, SignedBlade, format_blade, mul, parse_blade, square_sign


@dataclass(frozen=True)
class ElementSet:
    """Duplicate-free set of signed blades kept as a sorted tuple.

    Sorting is by mask, then sign (``+`` first), so two sets are equal exactly
    when their canonical listings agree.
    """

    elements: tuple[SignedBlade, ...]
    n: int

    @classmethod
    def of(cls, items: Iterable[SignedBlade], n: int) -> ElementSet:
        items = set(items)
        for x in items:
            if x.n != n:
                raise DimensionError(f"element {x} has dimension {x.n}, expected {n}")
        return cls(tuple(sorted(items, key=SignedBlade.sort_key)), n)

    @classmethod
    def parse(cls, literals: Iterable[str], n: int) -> ElementSet:
        return cls.of((parse_blade(t, n) for t in literals), n)

    @classmethod
    def pm_one(cls, n: int) -> ElementSet:
        return cls.of([SignedBlade.one(n), SignedBlade.minus_one(n)], n)

    @classmethod
    def full(cls, n: int) -> ElementSet:
        """All ``2**(n+1)`` elements of the basis group of Cl(n,0)."""
        return cls.of((SignedBlade(m, n, s) for m in range(1 << n) for s in (0, 1)), n)

    def __iter__(self) -> Iterator[SignedBlade]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    @property
    def _members(self) -> frozenset:
        # cached lazily; frozen dataclass forbids normal assignment
        try:
            return self.__dict__["_member_cache"]
        except KeyError:
            members = frozenset(self.elements)
            object.__setattr__(self, "_member_cache", members)
            return members

    def literals(self) -> list[str]:
        return [format_blade(x) for x in self.elements]

    def to_json(self) -> str:
        return json.dumps(self.literals())

    def __str__(self) -> str:
        return "{" + ", ".join(self.literals()) + "}"


def _check(a: ElementSet, b: ElementSet) -> None:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: Cl({a.n},0) vs Cl({b.n},0)")


def set_product(f: ElementSet, h: ElementSet) -> ElementSet:
    """``FH = {f h : f in F, h in H}``."""
    _check(f, h)
    return ElementSet.of((mul(x, y) for x in f for y in h), f.n)


def union(f: ElementSet, h: ElementSet) -> ElementSet:
    _check(f, h)
    return ElementSet.of(f.elements + h.elements, f.n)


def is_group(s: ElementSet) -> bool:
    """Closure test ``S S == S``; the empty set is not a group."""
    if not s.elements:
        return False
    return set_product(s, s) == s


def order(s: ElementSet) -> int:
    return len(s)


@dataclass(frozen=True)
class GeneratorList:
    """Ordered nontrivial generators, plus whether ``-1`` is adjoined.

    Generators must be pairwise distinct as unsigned blades and none may be
    ``+1`` or ``-1``.
    """

    generators: tuple[SignedBlade, ...]
    n: int
    adjoin_minus_one: bool = True

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        seen = set()
        for g in self.generators:
            if g.n != self.n:
                raise DimensionError(f"generator {g} has dimension {g.n}, expected {self.n}")
            if g.mask == 0:
                raise ValueError(f"generator {g} is trivial")
            if g.mask in seen:
                raise ValueError(f"generator {format_blade(g.unsigned())} repeated")
            seen.add(g.mask)
            assert square_sign(g) in (1, -1)

    @classmethod
    def parse(cls, literals: Sequence[str], n: int, adjoin_minus_one: bool = True) -> GeneratorList:
        return cls(tuple(parse_blade(t, n) for t in literals), n, adjoin_minus_one)

    def __len__(self) -> int:
        return len(self.generators)

    def literals(self) -> list[str]:
        return [format_blade(g) for g in self.generators]


def generate_closure(g: GeneratorList) -> ElementSet:
    """Smallest multiplicatively closed set holding 1, the generators and,
    when requested, -1.  Computed by squaring until the set stops growing."""
    seed = [SignedBlade.one(g.n), *g.generators]
    if g.adjoin_minus_one:
        seed.append(SignedBlade.minus_one(g.n))
    s = ElementSet.of(seed, g.n)
    while True:
        nxt = set_product(s, s)
        if nxt == s:
            return s
        s = nxt


def product_form(g: GeneratorList) -> ElementSet:
    """``{+-1}{1,h1}...{1,hm}`` expanded as an iterated set product."""
    s = ElementSet.pm_one(g.n)
    one = SignedBlade.one(g.n)
    for h in g.generators:
        s = set_product(s, ElementSet.of([one, h], g.n))
    return s
