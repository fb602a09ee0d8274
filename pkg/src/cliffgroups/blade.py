"""Signed basis blades of Cl(n,0) stored as bitmasks.

Bit ``j-1`` of a mask is set when the vector ``e_j`` is a factor.  The sign is
kept as a parity bit (0 for +, 1 for -) so every sign computation is an XOR.
The product sign comes from the Walsh function ``(-1)**M`` where ``M`` counts,
for every factor of the right operand, the factors of the left operand with a
strictly larger index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_DIM = 16

BLADE_GRAMMAR = '[+-]? ( "1" | "e" [1-9]+ )'
_LITERAL = re.compile(r"([+-]?)(?:(1)|e([1-9]+))")


class DimensionError(ValueError):
    """Operands live in Clifford algebras of different dimension."""


class BladeParseError(ValueError):
    """A blade literal does not match the grammar or names a missing vector."""

    def __init__(self, token: str, reason: str):
        self.token = token
        self.reason = reason
        super().__init__(f"bad blade literal {token!r}: {reason} (grammar: {BLADE_GRAMMAR})")


def set_bits(mask: int) -> Iterator[int]:
    """Yield 0-based positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def walsh_exponent(left: int, right: int) -> int:
    """Reordering count for the product of blade ``left`` times blade ``right``.

    For every set bit k of ``right`` this adds the number of set bits of
    ``left`` strictly above k.  Only the parity of the result matters.
    """
    m = 0
    for k in set_bits(right):
        m += (left >> (k + 1)).bit_count()
    return m


@dataclass(frozen=True)
class Blade:
    """Unsigned basis blade: a set of vector factors in ascending order."""

    mask: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#b} does not fit dimension {self.n}")

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple[int, ...]:
        """1-based vector indices, ascending."""
        return tuple(k + 1 for k in set_bits(self.mask))


@dataclass(frozen=True)
class SignedBlade:
    """An element ``(+/-) e_{i1} ... e_{ir}`` of the Clifford basis group.

    ``neg`` is the sign parity.  Instances are canonical: the pair
    ``(neg, mask)`` identifies the group element uniquely.
    """

    mask: int
    n: int
    neg: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#b} does not fit dimension {self.n}")
        if self.neg not in (0, 1):
            raise ValueError(f"sign parity must be 0 or 1, got {self.neg!r}")

    @classmethod
    def one(cls, n: int) -> SignedBlade:
        return cls(0, n, 0)

    @classmethod
    def minus_one(cls, n: int) -> SignedBlade:
        return cls(0, n, 1)

    @classmethod
    def vector(cls, j: int, n: int) -> SignedBlade:
        if not 1 <= j <= n:
            raise ValueError(f"vector index {j} outside 1..{n}")
        return cls(1 << (j - 1), n, 0)

    @property
    def sign(self) -> int:
        return -1 if self.neg else 1

    @property
    def blade(self) -> Blade:
        return Blade(self.mask, self.n)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(k + 1 for k in set_bits(self.mask))

    @property
    def is_scalar(self) -> bool:
        return self.mask == 0

    def sort_key(self) -> tuple[int, int]:
        return (self.mask, self.neg)

    def __neg__(self) -> SignedBlade:
        return SignedBlade(self.mask, self.n, self.neg ^ 1)

    def __mul__(self, other: SignedBlade) -> SignedBlade:
        return mul(self, other)

    def unsigned(self) -> SignedBlade:
        return SignedBlade(self.mask, self.n, 0)

    def __str__(self) -> str:
        return format_blade(self)


def _check_same_dim(a: SignedBlade, b: SignedBlade) -> None:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: Cl({a.n},0) vs Cl({b.n},0)")


def mul(a: SignedBlade, b: SignedBlade) -> SignedBlade:
    """Geometric product of two signed blades."""
    _check_same_dim(a, b)
    parity = a.neg ^ b.neg ^ (walsh_exponent(a.mask, b.mask) & 1)
    return SignedBlade(a.mask ^ b.mask, a.n, parity)


def product(blades: Iterable[SignedBlade], n: int) -> SignedBlade:
    """Left-to-right product of a sequence of blades; empty product is 1."""
    out = SignedBlade.one(n)
    for b in blades:
        out = mul(out, b)
    return out


def inverse(a: SignedBlade) -> SignedBlade:
    """Inverse via the reversed-factor Walsh exponent of the blade with itself."""
    parity = a.neg ^ (walsh_exponent(a.mask, a.mask) & 1)
    return SignedBlade(a.mask, a.n, parity)


def grade(a: SignedBlade) -> int:
    return a.mask.bit_count()


def square_sign(a: SignedBlade) -> int:
    """Sign of ``a * a``; the blade's own sign cancels."""
    return -1 if walsh_exponent(a.mask, a.mask) & 1 else 1


def commutes(a: SignedBlade, b: SignedBlade) -> bool:
    _check_same_dim(a, b)
    return (walsh_exponent(a.mask, b.mask) ^ walsh_exponent(b.mask, a.mask)) & 1 == 0


def naive_reorder_sign(factors: Iterable[int], n: int) -> SignedBlade:
    """Product ``e_{f1} e_{f2} ...`` by literal adjacent swaps.

    Bubble sort the index word; each swap of two distinct neighbours flips
    the sign and equal neighbours cancel (``e_j e_j = 1``).  This is the
    reference against which :func:`mul` is checked, so it deliberately avoids
    any bit arithmetic.
    """
    word = list(factors)
    for j in word:
        if not 1 <= j <= n:
            raise ValueError(f"vector index {j} outside 1..{n}")
    neg = 0
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] == word[i + 1]:
                del word[i:i + 2]
                changed = True
            elif word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                neg ^= 1
                changed = True
                i += 1
            else:
                i += 1
    mask = 0
    for j in word:
        mask |= 1 << (j - 1)
    return SignedBlade(mask, n, neg)


def parse_blade(text: str, n: int) -> SignedBlade:
    """Parse a literal such as ``"e13"``, ``"-e21"`` or ``"-1"``.

    Indices may appear in any order or repeat; the result is canonicalised.
    """
    token = text.strip()
    match = _LITERAL.fullmatch(token)
    if match is None:
        if re.fullmatch(r"[+-]?e[0-9]*", token) and "0" in token:
            raise BladeParseError(text, "vector index 0 does not exist")
        raise BladeParseError(text, "malformed literal")
    sign, scalar, digits = match.groups()
    neg = 1 if sign == "-" else 0
    if scalar:
        return SignedBlade(0, n, neg)
    indices = [int(c) for c in digits]
    too_big = [j for j in indices if j > n]
    if too_big:
        raise BladeParseError(text, f"index {too_big[0]} exceeds dimension {n}")
    word = naive_reorder_sign(indices, n)
    return SignedBlade(word.mask, n, word.neg ^ neg)


def format_blade(a: SignedBlade) -> str:
    """Canonical literal: ascending indices, sign written only when negative."""
    if a.mask == 0:
        body = "1"
    else:
        idx = a.indices
        if idx[-1] > 9:
            raise ValueError("blade literals can only name vectors e1..e9")
        body = "e" + "".join(str(j) for j in idx)
    return ("-" if a.neg else "") + body
