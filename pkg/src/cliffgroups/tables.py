"""Facsimiles of the ten Cl(3,0) taxonomy tables built from a report."""

from __future__ import annotations

import csv
import io
import json

from . import catalog
from .enumerator import Block, TaxonomyReport, format_chord
from .taxonomy import GroupRecord

CHOIR_COLUMNS = ("n", "≅", "Choir", "Sign")
BAND_COLUMNS = ("n", "≇", "Band", "Sign", "Φ", "X", "B")


class TableError(ValueError):
    pass


def _sign(r: GroupRecord) -> str:
    # the scalar group {±1} is listed with the square of its identity
    return r.signature or "+"


def _choir_row(r: GroupRecord, n=None) -> dict:
    return {"n": r.n if n is None else n, "≅": r.target, "Choir": r.pattern, "Sign": _sign(r)}


def _band_row(r: GroupRecord, pattern=None) -> dict:
    return {
        "n": r.n,
        "≇": r.target,
        "Band": pattern or r.pattern,
        "Sign": _sign(r),
        "Φ": r.disorder,
        "X": format_chord(r.chord),
        "B": str(r.beat) if r.beat else "",
    }


def _block(blocks: tuple[Block, ...], leader: str) -> Block:
    for b in blocks:
        if b.leader.pattern == leader:
            return b
    raise TableError(f"report has no block led by {leader}; tables need enumerate(3, 3)")


def _check_report(report: TaxonomyReport) -> None:
    if report.n != 3 or report.max_gens < 3:
        raise TableError("tables are defined for the report of enumerate(3, 3)")


def table_columns(table_id: int) -> tuple[str, ...]:
    if table_id == 1:
        return CHOIR_COLUMNS + ("Name",)
    if 2 <= table_id <= 5:
        return CHOIR_COLUMNS
    if 6 <= table_id <= 10:
        return BAND_COLUMNS
    raise TableError(f"table id must be 1..10, got {table_id}")


def table_rows(report: TaxonomyReport, table_id: int) -> list[dict]:
    table_columns(table_id)
    _check_report(report)
    if table_id == 1:
        return [
            {**_choir_row(r), "Name": catalog.ANGELIC_NAMES.get(r.pattern, "")}
            for r in report.choirs
        ]
    if table_id in catalog.MODE_TABLES:
        block = _block(report.modes, catalog.MODE_TABLES[table_id])
        return [_choir_row(r) for r in block.members]
    if table_id == 6:
        return [_band_row(r) for r in report.bands]
    block = _block(report.rhythms, catalog.RHYTHM_TABLES[table_id])
    return [_band_row(r) for r in block.members]


def table_notes(report: TaxonomyReport, table_id: int) -> list[str]:
    notes = []
    if table_id == 3:
        printed = ", ".join(f"{p} as n={k}" for p, k in catalog.TABLE3_PRINTED_N.items())
        notes.append(f"n is the generator count; the reference prints {printed}")
    if table_id in catalog.RHYTHM_TABLES:
        for (tid, pattern), shown in catalog.PRINTED_AS.items():
            if tid == table_id:
                notes.append(f"{pattern} is printed as {shown} in the reference (same class after relabelling)")
        notes.extend(report.notes)
    return notes


def title(table_id: int) -> str:
    table_columns(table_id)
    return f"Table {table_id}. {catalog.TITLES[table_id]}"


def render_text(report: TaxonomyReport, table_id: int) -> str:
    cols = table_columns(table_id)
    rows = table_rows(report, table_id)
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    out = [title(table_id), line(cols), line(["-" * w for w in widths])]
    out += [line(row) for row in cells]
    out += ["# " + n for n in table_notes(report, table_id)]
    return "\n".join(out) + "\n"


def render_csv(report: TaxonomyReport, table_id: int) -> str:
    cols = table_columns(table_id)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(table_rows(report, table_id))
    return buf.getvalue()


def render_json(report: TaxonomyReport, table_id: int) -> str:
    doc = {
        "table": table_id,
        "title": title(table_id),
        "columns": list(table_columns(table_id)),
        "rows": table_rows(report, table_id),
        "notes": table_notes(report, table_id),
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
