"""Classify the bundled table catalogs and write them back as markdown tables.

Each row is compared against the stored golden values (type, d, mu, H3,
polynomial); mismatches are listed on stderr and make the exit status 1.

Usage:
  python3 scripts/reproduce_tables.py --output-dir tables
"""

from __future__ import annotations

import argparse
import csv
import sys
from importlib import resources
from pathlib import Path

from linktop.catalog import emit, parse_catalog, run_batch
from linktop.torsion import format_homology

TABLES = ("table1", "table3")


def _golden(name: str) -> list[dict]:
    with resources.files("linktop").joinpath(f"data/{name}.csv").open() as fh:
        return list(csv.DictReader(fh))


def reproduce(name: str) -> tuple[bytes, list[str]]:
    text = resources.files("linktop").joinpath(f"data/{name}_catalog.csv").read_text()
    rows = run_batch(parse_catalog(text))
    problems = []
    for row, gold in zip(rows, _golden(name)):
        rec = row.record
        if rec is None:
            problems.append(f"{name} line {row.entry.source_line}: {row.error}")
            continue
        got = (rec.label, str(rec.ws.degree), str(rec.mu), format_homology(rec.homology), rec.polynomial)
        want = (gold["type"], gold["degree"], gold["mu"], gold["homology"], gold["polynomial"])
        if got != want:
            problems.append(f"{name} {rec.ws.weights}: got {got}, expected {want}")
    return emit([r.record for r in rows if r.record], "markdown"), problems


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--output-dir", type=Path, default=None, help="write <table>.md files here instead of stdout")
    ap.add_argument("--tables", nargs="+", choices=TABLES, default=list(TABLES))
    args = ap.parse_args()

    failures = 0
    for name in args.tables:
        table, problems = reproduce(name)
        if args.output_dir:
            args.output_dir.mkdir(parents=True, exist_ok=True)
            (args.output_dir / f"{name}.md").write_bytes(table)
        else:
            print(f"\n## {name}\n")
            sys.stdout.write(table.decode())
        for p in problems:
            print(p, file=sys.stderr)
        failures += len(problems)
        print(f"{name}: {'all rows match' if not problems else f'{len(problems)} mismatches'}", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
