"""Static display data for the ten reference tables of the Cl(3,0) taxonomy.

Nothing here affects classification; it only labels and selects rows.
"""

ANGELIC_NAMES = {
    "{±1}": "Seraphim",
    "E_a": "Cherubim",
    "E_ab": "Thrones",
    "E_abc": "Virtues",
    "E_a E_b": "Dominations",
    "E_a E_ab": "Powers",
    "E_ab E_ac": "Principalities",
    "E_a E_b E_c": "Archangels",
    "E_a E_ab E_ac": "Angels",
}

# table id -> pattern of the block leader
MODE_TABLES = {2: "{±1}", 3: "E_a", 4: "E_a E_b", 5: "E_a E_b E_c"}
RHYTHM_TABLES = {7: "{1,e_a}", 8: "E_a E_bc", 9: "E_a E_b E_ab", 10: "E_a E_b E_ac"}

TITLES = {
    1: "Choirs by signature",
    2: "Mode 0, cantor {±1}",
    3: "Mode 1, cantor E_a",
    4: "Mode 2, cantor E_a E_b",
    5: "Mode 3, cantor E_a E_b E_c",
    6: "Bands by signature, disorder, chord and beat",
    7: "Rhythm of {1,e_a}",
    8: "Rhythm of E_a E_bc",
    9: "Rhythm of E_a E_b E_ab",
    10: "Rhythm of E_a E_b E_ac",
}

# rows the reference tables print differently from the canonical pattern
PRINTED_AS = {(8, "E_ab E_abc"): "E_bc E_abc"}

# generator counts printed in the n column of Table 3 (the true count is 1 for all three)
TABLE3_PRINTED_N = {"E_a": 1, "E_ab": 2, "E_abc": 3}


def rhythm_discrepancies(rhythm_leaders):
    """Notes for rhythm blocks that no reference table covers."""
    covered = set(RHYTHM_TABLES.values())
    return [
        f"rhythm block led by {p} has no reference table (Tables 7-10 cover the other rhythms)"
        for p in rhythm_leaders
        if p not in covered
    ]
