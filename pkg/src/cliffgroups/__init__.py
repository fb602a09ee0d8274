"""Clifford basis groups of Cl(n,0): signed-blade arithmetic with Walsh
signs, geometric group closure, and the choir/band taxonomy of subgroups."""

from .blade import (
    Blade,
    BladeParseError,
    DimensionError,
    SignedBlade,
    commutes,
    format_blade,
    grade,
    inverse,
    mul,
    naive_reorder_sign,
    parse_blade,
    square_sign,
)
from .enumerator import TaxonomyReport, enumerate_taxonomy, mode_partition, rhythm_partition
from .groupset import ElementSet, GeneratorList, generate_closure, is_group, order, set_product, union
from .taxonomy import (
    Beat,
    GroupRecord,
    InvariantError,
    beat,
    chord,
    classify,
    disorder,
    equal,
    equivalent,
    presentation_isomorphic,
    similar,
)

__version__ = "0.1.0"
