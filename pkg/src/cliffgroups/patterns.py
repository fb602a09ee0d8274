"""Relabel-invariant pattern names such as ``E_a E_bc`` or ``{1,e_a}``."""

from __future__ import annotations

from itertools import permutations

from .blade import SignedBlade
from .groupset import ElementSet, GeneratorList, generate_closure

LETTERS = "abcdefghijklmnop"

Shape = tuple[tuple[int, ...], ...]


def _gen_key(t: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (len(t), t)


def canonical_shape(g: GeneratorList) -> Shape:
    """Lexicographically least relabelling of the unsigned generators.

    Generators are written as ascending index tuples and ordered by
    (grade, tuple).  Only the indices actually used are permuted; the least
    form always relabels them onto ``1..k``.
    """
    words = [s.indices for s in g.generators]
    used = sorted({j for w in words for j in w})
    best = None
    for image in permutations(range(1, len(used) + 1)):
        relabel = dict(zip(used, image))
        cand = tuple(sorted((tuple(sorted(relabel[j] for j in w)) for w in words), key=_gen_key))
        if best is None or [_gen_key(t) for t in cand] < [_gen_key(t) for t in best]:
            best = cand
    return best if best is not None else ()


def shape_sort_key(shape: Shape) -> tuple:
    return tuple(_gen_key(t) for t in shape)


def contains_minus_one(g: GeneratorList, closure: ElementSet | None = None) -> bool:
    if g.adjoin_minus_one:
        return True
    if closure is None:
        closure = generate_closure(g)
    return SignedBlade.minus_one(g.n) in closure


def render(shape: Shape, with_minus_one: bool) -> str:
    if not shape:
        return "{±1}" if with_minus_one else "{1}"
    names = ["".join(LETTERS[j - 1] for j in t) for t in shape]
    if with_minus_one:
        return " ".join("E_" + s for s in names)
    return "".join("{1,e_" + s + "}" for s in names)


def pattern_name(g: GeneratorList, closure: ElementSet | None = None) -> str:
    return render(canonical_shape(g), contains_minus_one(g, closure))


def representative(shape: Shape, n: int, adjoin_minus_one: bool = True) -> GeneratorList:
    """Generator list whose blades are exactly the tuples of ``shape``."""
    gens = []
    for t in shape:
        mask = 0
        for j in t:
            mask |= 1 << (j - 1)
        gens.append(SignedBlade(mask, n))
    return GeneratorList(tuple(gens), n, adjoin_minus_one)
