"""Reading and writing the three input schemas.

records   entity_id,paper_id,citations       one row per paper
summary   entity_id,P,C,Pz,Ch,h[,meta...]    the five counts per entity
vectors   entity_id[,h],X1,X2,X3,Y1,Y2,Y3[,meta...]   published vectors

All files are UTF-8, comma-delimited, with a header row. Lines starting with
``#`` are comments. Row numbers in errors are 1-based file line numbers.

A records row with empty ``paper_id`` and ``citations`` declares an entity
with no publications.

h-core ties: when papers with equal counts straddle rank h, the ones earlier
in the file belong to the h-core. Ch is the sum of the h largest counts, so
no output depends on that choice; it only fixes which paper ids are "core".
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .core import (
    CitationProfile,
    IndicatorRow,
    PublicationVector,
    CitationVector,
    SummaryStats,
    ValidationError,
    indicator_row,
    indicator_row_from_vectors,
    summarize,
)

RECORDS, SUMMARY, VECTORS = "records", "summary", "vectors"
MODES = (RECORDS, SUMMARY, VECTORS)

RECORD_COLUMNS = ("entity_id", "paper_id", "citations")
SUMMARY_COLUMNS = ("entity_id", "P", "C", "Pz", "Ch", "h")
VECTOR_COLUMNS = ("entity_id", "X1", "X2", "X3", "Y1", "Y2", "Y3")
# accepted in vectors files but recomputed from the components
DERIVED_COLUMNS = ("I3X", "I3Y", "Yh_sum", "Yh_formula")


@dataclass(frozen=True)
class Dataset:
    mode: str
    entities: tuple
    source: str = "<string>"
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entities", tuple(self.entities))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    def __len__(self):
        return len(self.entities)

    @property
    def ids(self) -> list[str]:
        return [e.entity_id for e in self.entities]

    def get(self, entity_id: str):
        for e in self.entities:
            if e.entity_id == entity_id:
                return e
        raise KeyError(entity_id)

    def indicator_rows(self) -> list[IndicatorRow]:
        if self.mode == VECTORS:
            return list(self.entities)
        if self.mode == RECORDS:
            return [indicator_row(summarize(p)) for p in self.entities]
        return [indicator_row(s) for s in self.entities]


def _data_lines(text: str):
    """(line number, line) pairs with comments and blank lines dropped."""
    for num, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#") or not line.strip():
            continue
        yield num, line


def _read_table(text: str, required: Sequence[str]) -> tuple[list[str], list[tuple[int, dict]]]:
    lines = list(_data_lines(text.lstrip("﻿")))
    if not lines:
        raise ValidationError(f"missing header row; expected {','.join(required)}", "header row")
    head_num, head_line = lines[0]
    header = [h.strip() for h in next(csv.reader([head_line]))]
    missing = [c for c in required if c not in header]
    if missing:
        raise ValidationError(
            f"header lacks column(s) {', '.join(missing)}; expected {','.join(required)}", "header row", head_num
        )
    if len(set(header)) != len(header):
        raise ValidationError("duplicate column names in header", "header row", head_num)
    rows = []
    for num, line in lines[1:]:
        cells = next(csv.reader([line]))
        if len(cells) != len(header):
            raise ValidationError(f"expected {len(header)} fields, found {len(cells)}", "field count", num)
        rows.append((num, {k: v.strip() for k, v in zip(header, cells)}))
    return header, rows


def _int(value: str, column: str, num: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ValidationError(f"{column}={value!r} is not an integer", f"integer {column}", num) from None


def _real(value: str, column: str, num: int) -> float:
    try:
        v = float(value)
    except ValueError:
        raise ValidationError(f"{column}={value!r} is not a number", f"numeric {column}", num) from None
    if math.isnan(v) or math.isinf(v):
        raise ValidationError(f"{column}={value!r} is not finite", f"finite {column}", num)
    return v


def _entity_id(cells: dict, num: int) -> str:
    eid = cells["entity_id"]
    if not eid:
        raise ValidationError("empty entity_id", "entity_id present", num)
    return eid


def _metadata(cells: dict, header: Sequence[str], known: Sequence[str], num: int) -> dict[str, float]:
    return {
        k: _real(cells[k], k, num) for k in header if k not in known and cells[k] != ""
    }


def parse_records(text: str, source: str = "<string>") -> Dataset:
    _, rows = _read_table(text, RECORD_COLUMNS)
    papers: dict[str, list[int]] = {}
    seen: set[tuple[str, str]] = set()
    for num, cells in rows:
        eid = _entity_id(cells, num)
        papers.setdefault(eid, [])
        pid, raw = cells["paper_id"], cells["citations"]
        if pid == "" and raw == "":
            continue
        if (eid, pid) in seen:
            raise ValidationError(f"duplicate paper {pid!r} for entity {eid!r}", "unique (entity_id, paper_id)", num)
        seen.add((eid, pid))
        c = _int(raw, "citations", num)
        if c < 0:
            raise ValidationError(f"citations={c} is negative", "citations >= 0", num)
        papers[eid].append(c)
    entities = [CitationProfile(eid, tuple(cs)) for eid, cs in papers.items()]
    return Dataset(RECORDS, entities, source)


def parse_summary(text: str, source: str = "<string>", skip_invalid: bool = False) -> Dataset:
    header, rows = _read_table(text, SUMMARY_COLUMNS)
    entities, warnings, seen = [], [], set()
    for num, cells in rows:
        eid = _entity_id(cells, num)
        if eid in seen:
            raise ValidationError(f"duplicate entity_id {eid!r}", "unique entity_id", num)
        counts = {k: _int(cells[k], k, num) for k in SUMMARY_COLUMNS[1:]}
        stats = SummaryStats(eid, metadata=_metadata(cells, header, SUMMARY_COLUMNS, num), **counts)
        bad = stats.violations()
        if bad:
            if not skip_invalid:
                raise ValidationError(f"{eid}: violates {', '.join(bad)}", bad[0], num)
            warnings.append(f"row {num}: skipped {eid}: violates {', '.join(bad)}")
            continue
        seen.add(eid)
        entities.append(stats)
    return Dataset(SUMMARY, entities, source, warnings)


def parse_vectors(text: str, source: str = "<string>") -> Dataset:
    header, rows = _read_table(text, VECTOR_COLUMNS)
    known = VECTOR_COLUMNS + DERIVED_COLUMNS + ("h", "e_index")
    entities, seen = [], set()
    for num, cells in rows:
        eid = _entity_id(cells, num)
        if eid in seen:
            raise ValidationError(f"duplicate entity_id {eid!r}", "unique entity_id", num)
        seen.add(eid)
        comp = {}
        for k in VECTOR_COLUMNS[1:]:
            v = _real(cells[k], k, num)
            if v < 0:
                raise ValidationError(f"{k}={v} is negative", f"{k} >= 0", num)
            comp[k] = v
        h = _int(cells["h"], "h", num) if cells.get("h", "") != "" else None
        if h is not None and h < 0:
            raise ValidationError(f"h={h} is negative", "h >= 0", num)
        e = _real(cells["e_index"], "e_index", num) if cells.get("e_index", "") != "" else None
        entities.append(
            indicator_row_from_vectors(
                eid,
                PublicationVector(comp["X1"], comp["X2"], comp["X3"]),
                CitationVector(comp["Y1"], comp["Y2"], comp["Y3"]),
                h=h,
                e=e,
                metadata=_metadata(cells, header, known, num),
            )
        )
    return Dataset(VECTORS, entities, source)


def detect_mode(text: str) -> str:
    for _, line in _data_lines(text.lstrip("﻿")):
        header = {h.strip() for h in next(csv.reader([line]))}
        if "citations" in header:
            return RECORDS
        if {"Pz", "Ch"} <= header:
            return SUMMARY
        if "X1" in header:
            return VECTORS
        break
    raise ValidationError("cannot infer input mode from header", "header row")


def parse(text: str, mode: Optional[str] = None, source: str = "<string>", skip_invalid: bool = False) -> Dataset:
    mode = mode or detect_mode(text)
    if mode == RECORDS:
        return parse_records(text, source)
    if mode == SUMMARY:
        return parse_summary(text, source, skip_invalid)
    if mode == VECTORS:
        return parse_vectors(text, source)
    raise ValueError(f"unknown mode {mode!r}")


def load(path: Union[str, Path], mode: Optional[str] = None, skip_invalid: bool = False) -> Dataset:
    path = Path(path)
    with open(path, encoding="utf-8", newline="") as f:
        text = f.read()
    return parse(text, mode, str(path), skip_invalid)


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("i3type") / "data" / name))


def load_fixture(name: str, mode: Optional[str] = None) -> Dataset:
    """Load one of the bundled data files, e.g. ``ec_journals_2011_2015.csv``."""
    return load(fixture_path(name), mode)


def _fmt(v: float) -> str:
    return repr(float(v))


def _write(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _meta_keys(entities) -> list[str]:
    keys: list[str] = []
    for e in entities:
        keys.extend(k for k in e.metadata if k not in keys)
    return keys


def serialize(dataset: Dataset) -> str:
    """Canonical text in the dataset's own schema; ``parse`` reads it back unchanged."""
    ents = dataset.entities
    if dataset.mode == RECORDS:
        rows = []
        for p in ents:
            if not p.citations:
                rows.append([p.entity_id, "", ""])
            rows.extend([p.entity_id, f"p{i}", c] for i, c in enumerate(p.citations, start=1))
        return _write(RECORD_COLUMNS, rows)
    meta = _meta_keys(ents)
    if dataset.mode == SUMMARY:
        return _write(
            SUMMARY_COLUMNS + tuple(meta),
            [[s.entity_id, s.P, s.C, s.Pz, s.Ch, s.h] + [_meta_cell(s, k) for k in meta] for s in ents],
        )
    header = ("entity_id", "h") + VECTOR_COLUMNS[1:] + ("e_index",) + tuple(meta)
    rows = []
    for r in ents:
        rows.append(
            [r.entity_id, "" if r.h is None else r.h]
            + [_fmt(getattr(r, k)) for k in VECTOR_COLUMNS[1:]]
            + ["" if r.e_index is None else _fmt(r.e_index)]
            + [_meta_cell(r, k) for k in meta]
        )
    return _write(header, rows)


def _meta_cell(entity, key: str) -> str:
    return _fmt(entity.metadata[key]) if key in entity.metadata else ""


def to_json(dataset: Dataset) -> str:
    def ent(e):
        if isinstance(e, CitationProfile):
            return {"entity_id": e.entity_id, "citations": list(e.citations)}
        if isinstance(e, SummaryStats):
            return {
                "entity_id": e.entity_id, "P": e.P, "C": e.C, "Pz": e.Pz, "Ch": e.Ch, "h": e.h,
                "metadata": dict(e.metadata),
            }
        return e.as_dict()

    doc = {
        "mode": dataset.mode,
        "source": dataset.source,
        "warnings": list(dataset.warnings),
        "entities": [ent(e) for e in dataset.entities],
    }
    return json.dumps(doc, indent=2, sort_keys=False)
