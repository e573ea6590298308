"""Corpus manifests, raw text loading, reference tables, and group selection.

Reference tables are the bundled per-group metric files under data/. Each
carries `# language:` and `# nobel:` directives so a file is self-describing;
any other `#` line is a free-form comment.
"""
from __future__ import annotations

import csv
import math
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from ._data import data_path

_YEAR_PREFIX = re.compile(r"^(\d{4})\.")


class Genre(Enum):
    SPEECH = "S"
    NOVEL_SEGMENT = "N"


class Language(Enum):
    ENGLISH = "English"
    SPANISH = "Spanish"

    @property
    def code(self) -> str:
        return "EN" if self is Language.ENGLISH else "ES"

    @classmethod
    def parse(cls, text: str) -> "Language":
        key = text.strip().lower()
        for lang in cls:
            if key in (lang.value.lower(), lang.code.lower()):
                return lang
        raise ValueError(f"unknown language {text!r} (expected English/EN or Spanish/ES)")


class Origin(Enum):
    ORIGINAL = "O"
    TRANSLATION = "T"


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    name: str
    genre: Genre
    language: Language
    origin: Origin
    nobel: bool
    year: int | None = None
    source_path: str | None = None

    def __post_init__(self):
        if self.year is not None and not 1300 <= self.year <= 2100:
            raise ValueError(f"entry {self.id}: year {self.year} outside 1300..2100")


@dataclass(frozen=True)
class ReferenceRow:
    """One row of a bundled metric table: recorded per-text results used as
    ground truth by the statistics commands."""
    entry: CorpusEntry
    d: float
    h: float
    d_rel: float
    h_rel: float
    j: float
    readability: float
    wqs: float

    def __post_init__(self):
        for field in ("d", "h", "d_rel", "h_rel", "j", "readability", "wqs"):
            if not math.isfinite(getattr(self, field)):
                raise ValueError(f"row {self.entry.id}: non-finite {field}")
        if not 0.0 <= self.d <= 1.0:
            raise ValueError(f"row {self.entry.id}: d={self.d} outside [0,1]")
        if not 0.0 <= self.h <= 1.0:
            raise ValueError(f"row {self.entry.id}: h={self.h} outside [0,1]")


@dataclass(frozen=True)
class GroupKey:
    language: Language
    nobel: bool


def _parse_year(name: str) -> int | None:
    m = _YEAR_PREFIX.match(name)
    return int(m.group(1)) if m else None


def _parse_bool(text: str, where: str) -> bool:
    key = text.strip().lower()
    if key in ("true", "1", "yes"):
        return True
    if key in ("false", "0", "no"):
        return False
    raise ValueError(f"{where}: bad boolean {text!r}")


MANIFEST_COLUMNS = ("id", "name", "genre", "origin", "language", "nobel", "year", "source_path")


def load_manifest(path: str | Path) -> list[CorpusEntry]:
    """Read a corpus manifest. Missing year falls back to a leading 'YYYY.'
    prefix of the name; empty source_path means no text on disk."""
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(row for row in fh if not row.startswith("#"))
        if reader.fieldnames is None:
            return entries
        missing = [c for c in MANIFEST_COLUMNS[:6] if c not in reader.fieldnames]
        if missing:
            raise ValueError(f"{path}: manifest missing columns {missing}")
        for lineno, row in enumerate(reader, start=2):
            where = f"{path}:{lineno}"
            try:
                genre = Genre(row["genre"].strip())
                origin = Origin(row["origin"].strip())
                language = Language.parse(row["language"])
                nobel = _parse_bool(row["nobel"], where)
                year_text = (row.get("year") or "").strip()
                year = int(year_text) if year_text else _parse_year(row["name"])
                source = (row.get("source_path") or "").strip() or None
                entry = CorpusEntry(
                    id=row["id"].strip(), name=row["name"].strip(), genre=genre,
                    language=language, origin=origin, nobel=nobel,
                    year=year, source_path=source,
                )
            except (KeyError, ValueError) as exc:
                raise ValueError(f"{where}: malformed manifest row: {exc}") from exc
            if entry.id in seen:
                raise ValueError(f"{where}: duplicate id {entry.id!r}")
            seen.add(entry.id)
            entries.append(entry)
    return entries


def save_manifest(entries: list[CorpusEntry], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(MANIFEST_COLUMNS)
        for e in entries:
            writer.writerow([
                e.id, e.name, e.genre.value, e.origin.value, e.language.code,
                "true" if e.nobel else "false",
                "" if e.year is None else e.year,
                e.source_path or "",
            ])


REFERENCE_COLUMNS = ("id", "name", "genre", "origin", "d", "h", "d_rel", "h_rel", "j", "readability", "wqs")


def load_reference_table(
    path: str | Path,
    language: Language | None = None,
    nobel: bool | None = None,
) -> list[ReferenceRow]:
    """Read one bundled metric table. language/nobel default to the file's
    `# language:` / `# nobel:` directives and may be overridden."""
    rows: list[ReferenceRow] = []
    with open(path, newline="", encoding="utf-8") as fh:
        data_lines: list[str] = []
        for raw in fh:
            if raw.startswith("#"):
                body = raw[1:].strip()
                if body.lower().startswith("language:") and language is None:
                    language = Language.parse(body.split(":", 1)[1])
                elif body.lower().startswith("nobel:") and nobel is None:
                    nobel = _parse_bool(body.split(":", 1)[1], str(path))
                continue
            data_lines.append(raw)
    if language is None or nobel is None:
        raise ValueError(f"{path}: missing language/nobel directives and no override given")
    reader = csv.DictReader(data_lines)
    if reader.fieldnames is None:
        return rows
    missing = [c for c in REFERENCE_COLUMNS if c not in reader.fieldnames]
    if missing:
        raise ValueError(f"{path}: reference table missing columns {missing}")
    for row in reader:
        rid = row["id"].strip()
        entry = CorpusEntry(
            id=rid, name=row["name"].strip(), genre=Genre(row["genre"].strip()),
            language=language, origin=Origin(row["origin"].strip()), nobel=nobel,
            year=_parse_year(row["name"].strip()),
        )
        metrics = {}
        for field in ("d", "h", "d_rel", "h_rel", "j", "readability", "wqs"):
            try:
                metrics[field] = float(row[field])
            except (TypeError, ValueError) as exc:
                raise ValueError(f"{path} row {rid}: non-numeric {field}={row[field]!r}") from exc
        rows.append(ReferenceRow(entry=entry, **metrics))
    return rows


BUNDLED_TABLES = (
    ("english_non_nobel.csv", Language.ENGLISH, False),
    ("english_nobel.csv", Language.ENGLISH, True),
    ("spanish_non_nobel.csv", Language.SPANISH, False),
    ("spanish_nobel.csv", Language.SPANISH, True),
)


def load_bundled_tables(directory: str | Path | None = None) -> list[ReferenceRow]:
    """All four bundled metric tables concatenated. directory overrides the
    package data dir (the LEXIGAUGE_PRESET_DIR env var also does)."""
    rows: list[ReferenceRow] = []
    for name, language, nobel in BUNDLED_TABLES:
        path = Path(directory) / name if directory is not None else data_path(name)
        if not Path(path).is_file():
            raise FileNotFoundError(f"reference table {name} not found in {Path(path).parent}")
        rows.extend(load_reference_table(path, language=language, nobel=nobel))
    return rows


def select_group(rows: list[ReferenceRow], key: GroupKey) -> list[ReferenceRow]:
    """Statistical group membership: speeches only; laureate groups keep
    original-language texts only, non-laureate groups keep translations too."""
    out = []
    for row in rows:
        e = row.entry
        if e.language is not key.language or e.nobel is not key.nobel:
            continue
        if e.genre is not Genre.SPEECH:
            continue
        if key.nobel and e.origin is not Origin.ORIGINAL:
            continue
        out.append(row)
    return out


def load_text(entry: CorpusEntry) -> str:
    """Raw UTF-8 text for an entry. Missing-path, missing-file, and bad-bytes
    problems raise distinct error types."""
    if not entry.source_path:
        raise ValueError(f"entry {entry.id}: no source text")
    path = Path(entry.source_path)
    if not path.is_file():
        raise FileNotFoundError(f"entry {entry.id}: source text {path} not found")
    return path.read_text(encoding="utf-8")


REPORT_COLUMNS = (
    "id", "name", "genre", "origin", "L", "D", "d", "h", "g", "j",
    "d_rel", "h_rel", "W", "S", "readability", "wqs_verbatim", "wqs_reconstructed",
)

_REPORT_INT = frozenset(("L", "D"))
_REPORT_STR = frozenset(("id", "name", "genre", "origin"))


def load_report(path: str | Path) -> list[dict]:
    """Parse an analysis report written by the command-line tool back into
    typed records (ints for counts, floats for metrics)."""
    records: list[dict] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(row for row in fh if not row.startswith("#"))
        if reader.fieldnames is None:
            return records
        missing = [c for c in REPORT_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise ValueError(f"{path}: report missing columns {missing}")
        for row in reader:
            rec: dict = {}
            for col in REPORT_COLUMNS:
                value = row[col]
                if col in _REPORT_STR:
                    rec[col] = value
                elif col in _REPORT_INT:
                    rec[col] = int(value)
                else:
                    rec[col] = float(value)
            records.append(rec)
    return records
