"""Catalog ingestion, batch classification and table emitters.

Normalized CSV schema, one link per line::

    w0,...,w{m-1}[,d][,ke]

Without a header the number of weights is fixed by ``n_weights`` (5 for the
7-dimensional catalogs).  A header naming ``w0 ... d ke`` columns lifts that
restriction, which is also what the CSV emitter writes, so emitted tables can
be read back.  JSONL lines are objects ``{"weights": [...], "degree": d, "ke": bool}``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .classify import LinkRecord, classify_link
from .torsion import format_homology
from .weights import make_weight_system

log = logging.getLogger(__name__)

_TRUE = {"true", "t", "yes", "y", "1", "ke"}
_FALSE = {"false", "f", "no", "n", "0", ""}


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass(frozen=True)
class CatalogEntry:
    weights: tuple[int, ...]
    degree: int | None = None
    ke_flag: bool | None = None
    source_line: int = 0


def _flag(token: str, line: int) -> bool:
    t = token.strip().lower()
    if t in _TRUE:
        return True
    if t in _FALSE:
        return False
    raise ParseError(line, f"cannot read KE flag {token!r}")


def _int(token: str, line: int) -> int:
    try:
        value = int(token.strip())
    except ValueError:
        raise ParseError(line, f"not an integer: {token!r}") from None
    if value < 1:
        raise ParseError(line, f"must be positive: {value}")
    return value


def _entry_from_tokens(tokens: list[str], line: int, n_weights: int) -> CatalogEntry:
    tokens = [t.strip() for t in tokens]
    if len(tokens) < n_weights:
        raise ParseError(line, f"expected at least {n_weights} weights, got {len(tokens)} fields")
    if len(tokens) > n_weights + 2:
        raise ParseError(line, f"too many fields ({len(tokens)})")
    weights = tuple(_int(t, line) for t in tokens[:n_weights])
    rest = tokens[n_weights:]
    degree = ke = None
    if rest and rest[0] and re.fullmatch(r"\d+", rest[0]):
        degree = _int(rest.pop(0), line)
    if rest:
        ke = _flag(rest.pop(0), line)
    if rest:
        raise ParseError(line, f"unexpected trailing field {rest[0]!r}")
    return CatalogEntry(weights, degree, ke, line)


def _entry_from_row(row: dict, header: list[str], line: int) -> CatalogEntry:
    wcols = sorted((h for h in header if re.fullmatch(r"w\d+", h)), key=lambda h: int(h[1:]))
    weights = tuple(_int(row[h], line) for h in wcols if row.get(h, "").strip())
    if not weights:
        raise ParseError(line, "no weights")
    dcol = next((h for h in ("d", "degree") if h in header), None)
    degree = _int(row[dcol], line) if dcol and row.get(dcol, "").strip() else None
    kcol = next((h for h in ("ke", "ke_flag") if h in header), None)
    ke = _flag(row[kcol], line) if kcol and row.get(kcol, "").strip() else None
    return CatalogEntry(weights, degree, ke, line)


def parse_catalog(data: bytes | str, fmt: str = "csv", n_weights: int = 5) -> list[CatalogEntry]:
    text = data.decode() if isinstance(data, bytes) else data
    entries: list[CatalogEntry] = []
    if fmt == "jsonl":
        for i, raw in enumerate(text.splitlines(), 1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
                weights = tuple(int(x) for x in obj["weights"])
                degree = obj.get("degree")
                entries.append(CatalogEntry(weights, None if degree is None else int(degree), obj.get("ke"), i))
            except (ValueError, KeyError, TypeError) as exc:
                raise ParseError(i, str(exc)) from None
            if any(x < 1 for x in weights):
                raise ParseError(i, "weights must be positive")
    elif fmt == "csv":
        rows = [(i, r) for i, r in enumerate(csv.reader(io.StringIO(text)), 1)]
        rows = [(i, r) for i, r in rows if r and not r[0].lstrip().startswith("#") and any(x.strip() for x in r)]
        header = None
        if rows and rows[0][1][0].strip().lower() == "w0":
            header = [h.strip().lower() for h in rows.pop(0)[1]]
        for i, r in rows:
            if header:
                entries.append(_entry_from_row(dict(zip(header, r)), header, i))
            else:
                entries.append(_entry_from_tokens(r, i, n_weights))
    else:
        raise ValueError(f"unknown catalog format {fmt!r}")
    seen: dict[tuple, int] = {}
    for e in entries:
        key = (e.weights, e.degree)
        if key in seen:
            log.warning("duplicate entry %s on lines %d and %d", e.weights, seen[key], e.source_line)
        else:
            seen[key] = e.source_line
    return entries


def convert_upstream(text: str, n_weights: int = 5) -> list[CatalogEntry]:
    """Best-effort reader for the plain-text Kahler-Einstein list.

    Takes the first ``n_weights`` integers on each line as the weights; the
    line counts as KE when it carries a standalone ``KE``/``yes``/``true``
    token, as not-KE on ``no``/``false``/``unknown``, and unflagged otherwise.
    """
    entries = []
    for i, raw in enumerate(text.splitlines(), 1):
        ints = re.findall(r"(?<![\w.])\d+(?![\w.])", raw)
        if len(ints) < n_weights:
            continue
        words = {t.lower() for t in re.findall(r"[A-Za-z]+", raw)}
        ke = True if words & {"ke", "yes", "true"} else False if words & {"no", "false", "unknown"} else None
        entries.append(CatalogEntry(tuple(int(x) for x in ints[:n_weights]), None, ke, i))
    return entries


@dataclass(frozen=True)
class BatchRow:
    entry: CatalogEntry
    record: LinkRecord | None
    error: str | None = None


def _classify_entry(entry: CatalogEntry) -> BatchRow:
    try:
        ws = make_weight_system(entry.weights, entry.degree)
        return BatchRow(entry, classify_link(ws, entry.ke_flag))
    except Exception as exc:  # per-entry failures are data
        return BatchRow(entry, None, f"{type(exc).__name__}: {exc}")


def run_batch(entries, filter_ke: bool = False, workers: int = 1) -> list[BatchRow]:
    entries = [e for e in entries if not filter_ke or e.ke_flag]
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_classify_entry, entries, chunksize=16))
    return [_classify_entry(e) for e in entries]


MARKDOWN_HEADER = "| w | Polynomial | Type | d | mu | H3 |\n|---|---|---|---|---|---|\n"


def _markdown_row(rec: LinkRecord) -> str:
    w = "(" + ",".join(map(str, rec.ws.weights)) + ")"
    return f"| {w} | {rec.polynomial} | {rec.label} | {rec.ws.degree} | {rec.mu} | {format_homology(rec.homology)} |\n"


def emit(records, fmt: str = "markdown") -> bytes:
    records = list(records)
    if fmt == "markdown":
        return (MARKDOWN_HEADER + "".join(_markdown_row(r) for r in records)).encode()
    if fmt == "jsonl":
        return "".join(json.dumps(r.as_dict()) + "\n" for r in records).encode()
    if fmt == "csv":
        m = max((r.ws.m for r in records), default=5)
        out = io.StringIO()
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow([f"w{i}" for i in range(m)] + ["d", "ke", "type", "polynomial", "mu", "rank", "torsion", "kind"])
        for r in records:
            h = r.homology
            wr.writerow(
                list(r.ws.weights)
                + [""] * (m - r.ws.m)
                + [
                    r.ws.degree,
                    "" if r.ke_flag is None else str(r.ke_flag).lower(),
                    r.label,
                    r.polynomial,
                    r.mu,
                    h.rank,
                    "" if h.torsion is None else " ".join(map(str, h.torsion)),
                    r.kind_label,
                ]
            )
        return out.getvalue().encode()
    raise ValueError(f"unknown output format {fmt!r}")
