"""Exhaustive enumeration of generator presentations over the blades of
Cl(n,0), deduplicated into similarity classes and partitioned into modes
(choirs) and rhythms (bands)."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import catalog
from .blade import SignedBlade
from .groupset import GeneratorList, generate_closure
from .patterns import Shape, canonical_shape, representative, shape_sort_key
from .taxonomy import GroupRecord, classify, equivalent, presentation_isomorphic

MAX_EXHAUSTIVE_DIM = 7

ClassKey = tuple[bool, Shape]


@dataclass(frozen=True)
class Block:
    leader: GroupRecord
    members: tuple[GroupRecord, ...]

    def to_dict(self) -> dict:
        return {"leader": self.leader.pattern, "members": [r.pattern for r in self.members]}


@dataclass(frozen=True)
class TaxonomyReport:
    n: int
    max_gens: int
    classes: tuple[GroupRecord, ...]
    modes: tuple[Block, ...]
    rhythms: tuple[Block, ...]
    isomorphism_classes: tuple[tuple[str, ...], ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def choirs(self) -> list[GroupRecord]:
        return [r for r in self.classes if r.is_choir]

    @property
    def bands(self) -> list[GroupRecord]:
        return [r for r in self.classes if not r.is_choir]

    @property
    def counts(self) -> tuple[int, int, int]:
        c = len(self.choirs)
        return (len(self.classes), c, len(self.classes) - c)

    def by_pattern(self, pattern: str) -> GroupRecord:
        for r in self.classes:
            if r.pattern == pattern:
                return r
        raise KeyError(pattern)

    def to_dict(self) -> dict:
        total, choirs, bands = self.counts
        return {
            "n": self.n,
            "max_gens": self.max_gens,
            "counts": {"total": total, "choirs": choirs, "bands": bands},
            "classes": [r.to_dict() for r in self.classes],
            "modes": [b.to_dict() for b in self.modes],
            "rhythms": [b.to_dict() for b in self.rhythms],
            "isomorphism_classes": [list(c) for c in self.isomorphism_classes],
            "notes": list(self.notes),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.classes:
            w.writerow(csv_row(r))
        return buf.getvalue()


CSV_COLUMNS = ("pattern", "n", "order", "class", "signature", "target", "disorder", "chord", "beat")


def format_chord(chord) -> str:
    return "(" + ",".join(map(str, chord)) + ")" if chord else ""


def csv_row(r: GroupRecord) -> list:
    return [
        r.pattern, r.n, r.order, r.verdict, r.signature, r.target, r.disorder,
        format_chord(r.chord), str(r.beat) if r.beat else "",
    ]


def record_key(r: GroupRecord) -> tuple:
    """Display order: generator count, then more positive squares first,
    then raw presentations, then the pattern's (grade, indices) order."""
    shape = tuple(h.indices for h in r.generators.generators)
    raw = 0 if not r.generators.adjoin_minus_one else 1
    return (r.n, -r.clifford_target[0], raw, shape_sort_key(shape))


def leader_key(r: GroupRecord) -> tuple:
    shape = tuple(h.indices for h in r.generators.generators)
    return (r.n, shape_sort_key(shape))


def _scan(n: int, subsets) -> dict[ClassKey, None]:
    found: dict[ClassKey, None] = {}
    for masks in subsets:
        gens = tuple(SignedBlade(m, n) for m in masks)
        shape = canonical_shape(GeneratorList(gens, n, True))
        found[(True, shape)] = None
        raw = GeneratorList(gens, n, False)
        if SignedBlade.minus_one(n) not in generate_closure(raw):
            found[(False, shape)] = None
    return found


def _scan_chunk(args):
    n, subsets = args
    return list(_scan(n, subsets))


def class_keys(n: int, max_gens: int, workers: int = 1) -> list[ClassKey]:
    """Distinct similarity classes, including the bare ``{±1}``."""
    blades = range(1, 1 << n)
    subsets = [c for k in range(1, max_gens + 1) for c in combinations(blades, k)]
    keys: set[ClassKey] = {(True, ())}
    if workers > 1 and len(subsets) > 1:
        step = -(-len(subsets) // (4 * workers))
        chunks = [(n, subsets[i:i + step]) for i in range(0, len(subsets), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_chunk, chunks):
                keys.update(part)
    else:
        keys.update(_scan(n, subsets))
    return sorted(keys, key=lambda k: (len(k[1]), k[0], shape_sort_key(k[1])))


def _partition(records, same_block) -> tuple[Block, ...]:
    groups: list[list[GroupRecord]] = []
    for r in sorted(records, key=leader_key):
        for grp in groups:
            if same_block(grp[0], r):
                grp.append(r)
                break
        else:
            groups.append([r])
    blocks = [
        Block(min(g, key=leader_key), tuple(sorted(g, key=record_key)))
        for g in groups
    ]
    return tuple(sorted(blocks, key=lambda b: record_key(b.leader)))


def mode_partition(choirs) -> tuple[Block, ...]:
    """Choirs with the same number of generators share one mode.

    Every choir on n generators has the canonical listing
    ``{±1}{1,h1}...{1,hn}`` in its own generators, so the block key is n.
    """
    return _partition(choirs, lambda a, b: a.n == b.n)


def rhythm_partition(bands) -> tuple[Block, ...]:
    """Bands whose element sets agree up to relabelling of the vectors."""
    return _partition(bands, lambda a, b: equivalent(a.closure, b.closure))


def isomorphism_classes(records) -> tuple[tuple[str, ...], ...]:
    """Group similarity classes whose presentations are isomorphic
    (same generator squares and commutation graph)."""
    groups: list[list[GroupRecord]] = []
    for r in records:
        for grp in groups:
            if presentation_isomorphic(grp[0].generators, r.generators):
                grp.append(r)
                break
        else:
            groups.append([r])
    return tuple(tuple(r.pattern for r in g) for g in groups)


def enumerate_taxonomy(n: int, max_gens: int, workers: int = 1) -> TaxonomyReport:
    if not 1 <= n <= MAX_EXHAUSTIVE_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_EXHAUSTIVE_DIM}, got {n}")
    if not 0 <= max_gens <= (1 << n) - 1:
        raise ValueError(f"max_gens must be in 0..{(1 << n) - 1}, got {max_gens}")
    records = [classify(representative(shape, n, adjoin)) for adjoin, shape in class_keys(n, max_gens, workers)]
    records.sort(key=record_key)
    choirs = [r for r in records if r.is_choir]
    bands = [r for r in records if not r.is_choir]
    rhythms = rhythm_partition(bands)
    notes = ()
    if n == 3 and max_gens >= 3:
        notes = tuple(catalog.rhythm_discrepancies(b.leader.pattern for b in rhythms))
    return TaxonomyReport(
        n, max_gens, tuple(records), mode_partition(choirs), rhythms, isomorphism_classes(records), notes
    )


def restrict(report: TaxonomyReport, dim: int) -> list[GroupRecord]:
    """Classes whose generators all live in Cl(dim,0)."""
    limit = 1 << dim
    return [r for r in report.classes if all(h.mask < limit for h in r.generators.generators)]
