"""Choir/band classification of generator presentations and the four
group relations (isomorphic, similar, equivalent, equal)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import NamedTuple, Sequence

from .blade import DimensionError, SignedBlade, commutes, format_blade, mul, square_sign
from .groupset import ElementSet, GeneratorList, generate_closure, set_product
from .patterns import contains_minus_one, pattern_name

CHOIR = "choir"
BAND = "band"


class InvariantError(AssertionError):
    """An internal consistency check failed."""


class Beat(NamedTuple):
    """Unreduced fraction ``T / (n(n-1))``; printed as e.g. ``4/6``."""

    num: int
    den: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class GroupRecord:
    generators: GeneratorList
    closure: ElementSet
    n: int
    m: int
    signature: str
    verdict: str
    clifford_target: tuple[int, int]
    disorder: int
    chord: tuple[int, ...]
    beat: Beat | None
    pattern: str

    @property
    def order(self) -> int:
        return len(self.closure)

    @property
    def is_choir(self) -> bool:
        return self.verdict == CHOIR

    @property
    def target(self) -> str:
        p, q = self.clifford_target
        return f"C({p},{q})"

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "generators": self.generators.literals(),
            "n": self.n,
            "order": self.order,
            "class": self.verdict,
            "signature": self.signature,
            "target": self.target,
            "disorder": self.disorder,
            "chord": list(self.chord),
            "beat": None if self.beat is None else {"num": self.beat.num, "den": self.beat.den},
        }


def disorder(n: int, order: int) -> int:
    """``n + 1 - log2(order)``."""
    if order < 1 or order & (order - 1):
        raise InvariantError(f"group order {order} is not a power of two")
    return n + 1 - (order.bit_length() - 1)


def chord(g: GeneratorList) -> tuple[int, ...]:
    """Per generator, how many of the other generators it commutes with."""
    gens = g.generators
    return tuple(
        sum(1 for j, b in enumerate(gens) if j != i and commutes(a, b))
        for i, a in enumerate(gens)
    )


def beat(chord: Sequence[int], n: int) -> Beat | None:
    if n < 2:
        return None
    return Beat(sum(chord), n * (n - 1))


def signature(g: GeneratorList) -> str:
    return "".join("+" if square_sign(h) > 0 else "-" for h in g.generators)


def classify(g: GeneratorList) -> GroupRecord:
    closure = generate_closure(g)
    n = len(g)
    order = len(closure)
    phi = disorder(n, order)
    sig = signature(g)
    anticommuting = all(not commutes(a, b) for a, b in combinations(g.generators, 2))
    verdict = CHOIR if anticommuting and phi == 0 else BAND
    # chord and beat are undefined for fewer than two generators
    x = chord(g) if n >= 2 else ()
    return GroupRecord(
        generators=g,
        closure=closure,
        n=n,
        m=order.bit_length() - 1,
        signature=sig,
        verdict=verdict,
        clifford_target=(sig.count("+"), sig.count("-")),
        disorder=phi,
        chord=x,
        beat=beat(x, n),
        pattern=pattern_name(g, closure),
    )


def check_record(rec: GroupRecord) -> None:
    """Raise :class:`InvariantError` unless ``rec`` is internally consistent."""
    problems = []
    if set_product(rec.closure, rec.closure) != rec.closure:
        problems.append("closure is not multiplicatively closed")
    if rec.order != 1 << rec.m:
        problems.append(f"order {rec.order} != 2**{rec.m}")
    if rec.disorder != rec.n + 1 - rec.m or rec.disorder < 0:
        problems.append(f"disorder {rec.disorder} inconsistent with n={rec.n}, m={rec.m}")
    anti = all(not commutes(a, b) for a, b in combinations(rec.generators.generators, 2))
    if rec.is_choir != (anti and rec.disorder == 0):
        problems.append("choir verdict disagrees with the criteria")
    if rec.is_choir and rec.order != 1 << (rec.n + 1):
        problems.append("choir order is not 2**(n+1)")
    if any(not 0 <= c <= rec.n - 1 for c in rec.chord):
        problems.append(f"chord entry out of range in {rec.chord}")
    if rec.beat is not None:
        if rec.beat.num != sum(rec.chord) or rec.beat.den != rec.n * (rec.n - 1):
            problems.append(f"beat {rec.beat} does not match chord {rec.chord}")
        if not 0 <= rec.beat.value <= 1:
            problems.append(f"beat {rec.beat} outside [0, 1]")
        if rec.is_choir and rec.beat.num != 0:
            problems.append("choir with nonzero beat")
    if problems:
        raise InvariantError(f"{rec.pattern}: " + "; ".join(problems))


def _relation_data(g: GeneratorList):
    squares = [square_sign(h) for h in g.generators]
    k = len(g)
    comm = [[commutes(g.generators[i], g.generators[j]) for j in range(k)] for i in range(k)]
    return squares, comm


def presentation_isomorphic(a: GeneratorList, b: GeneratorList) -> bool:
    """Is there a generator bijection preserving squares and (anti)commutation?"""
    if len(a) != len(b):
        return False
    sa, ca = _relation_data(a)
    sb, cb = _relation_data(b)
    if sorted(sa) != sorted(sb):
        return False
    k = len(a)
    for perm in permutations(range(k)):
        if any(sa[i] != sb[perm[i]] for i in range(k)):
            continue
        if all(ca[i][j] == cb[perm[i]][perm[j]] for i in range(k) for j in range(i + 1, k)):
            return True
    return False


def _permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for j in range(len(perm)):
        if mask >> j & 1:
            out |= 1 << perm[j]
    return out


def similar(a: GeneratorList, b: GeneratorList) -> bool:
    """Same unsigned generators up to relabelling the vector indices.

    ``-1`` counts as a (trivial) generator, so ``{1,e_a}`` is not similar to
    ``E_a``.
    """
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: Cl({a.n},0) vs Cl({b.n},0)")
    if len(a) != len(b):
        return False
    if contains_minus_one(a) != contains_minus_one(b):
        return False
    target = sorted(h.mask for h in b.generators)
    masks = [h.mask for h in a.generators]
    for perm in permutations(range(a.n)):
        if sorted(_permute_mask(m, perm) for m in masks) == target:
            return True
    return False


def relabel(x: SignedBlade, perm: Sequence[int]) -> SignedBlade:
    """Image of ``x`` when ``e_j`` is replaced by ``e_{perm[j-1]+1}``."""
    out = SignedBlade(0, x.n, x.neg)
    for j in x.indices:
        out = mul(out, SignedBlade.vector(perm[j - 1] + 1, x.n))
    return out


def equivalent(a: ElementSet, b: ElementSet) -> bool:
    """Equal canonical listings after some relabelling of vector indices."""
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: Cl({a.n},0) vs Cl({b.n},0)")
    if len(a) != len(b):
        return False
    if sorted(x.grade for x in a) != sorted(x.grade for x in b):
        return False
    for perm in permutations(range(a.n)):
        if ElementSet.of((relabel(x, perm) for x in a), a.n) == b:
            return True
    return False


def equal(a: ElementSet, b: ElementSet) -> bool:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: Cl({a.n},0) vs Cl({b.n},0)")
    return a == b


def relations(a: GeneratorList, b: GeneratorList) -> dict[str, bool]:
    """All four verdicts for a pair of presentations in the same dimension."""
    ca, cb = generate_closure(a), generate_closure(b)
    return {
        "isomorphic": presentation_isomorphic(a, b),
        "similar": similar(a, b),
        "equivalent": equivalent(ca, cb),
        "equal": equal(ca, cb),
    }


def describe(rec: GroupRecord) -> str:
    gens = " ".join(format_blade(h) for h in rec.generators.generators) or "(none)"
    rows = [
        ("pattern", rec.pattern),
        ("generators", gens + ("" if rec.generators.adjoin_minus_one else "  [-1 not adjoined]")),
        ("n", rec.n),
        ("order", rec.order),
        ("class", rec.verdict),
        ("signature", rec.signature or "(empty)"),
        ("target", rec.target),
        ("disorder", rec.disorder),
        ("chord", "(" + ",".join(map(str, rec.chord)) + ")" if rec.chord else "-"),
        ("beat", str(rec.beat) if rec.beat else "-"),
        ("elements", str(rec.closure)),
    ]
    return "\n".join(f"{k:<11}{v}" for k, v in rows)
