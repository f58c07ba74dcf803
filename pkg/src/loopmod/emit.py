"""Deterministic serialization of reports: JSON, CSV and DOT, LF line endings."""

from __future__ import annotations

import csv
import io
import json

from .characters import CharacterTable
from .crystal import AxiomReport, CrystalGraph
from .errors import FormatMismatch
from .loop import DecompositionReport

FORMATS = ("json", "csv", "dot")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _plain(obj):
    """Tuples to lists and non-JSON scalars to strings, recursively."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _join(parts) -> str:
    return ";".join(str(p) for p in parts)


def character_csv(table: CharacterTable) -> str:
    rows = [[_join(r["composition"]), _join(r["nu"]), r["k"], r["closed"], r["brute"], r["maj"]]
            for r in table.rows]
    return _csv(["composition", "nu", "k", "closed", "brute", "maj"], rows)


def character_dict(table: CharacterTable) -> dict:
    return {"n": table.n, "m": table.m, "rows": _plain(table.rows),
            "discrepancies": _plain(table.discrepancies)}


def decomposition_csv(rep: DecompositionReport) -> str:
    rows = []
    for h in rep.components:
        for e in rep.component_dims(h.s):
            rows.append([h.s, _join(e["composition"]), e["r"], e["dim"]])
    return _csv(["s", "composition", "r", "dim"], rows)


def emit(report, fmt: str) -> bytes:
    """Serialize a report; raises FormatMismatch for unsupported pairs."""
    if fmt not in FORMATS:
        raise FormatMismatch(f"unknown format {fmt!r}")
    text = None
    if isinstance(report, DecompositionReport):
        if fmt == "json":
            text = _json(report.to_dict())
        elif fmt == "csv":
            text = decomposition_csv(report)
    elif isinstance(report, CharacterTable):
        if fmt == "json":
            text = _json(character_dict(report))
        elif fmt == "csv":
            text = character_csv(report)
    elif isinstance(report, CrystalGraph):
        if fmt == "json":
            text = report.to_json()
        elif fmt == "dot":
            text = report.to_dot()
    elif isinstance(report, AxiomReport):
        if fmt == "json":
            text = _json({"n": report.n, "N": report.N, "m": report.m,
                          "checked": report.checked, "violations": _plain(report.violations)})
    elif isinstance(report, dict):
        if fmt == "json":
            text = _json(_plain(report))
    if text is None:
        raise FormatMismatch(f"cannot write {type(report).__name__} as {fmt}")
    return text.encode("utf-8")
