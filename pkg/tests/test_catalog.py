import json
import logging
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linktop.catalog import (
    MARKDOWN_HEADER,
    CatalogEntry,
    ParseError,
    convert_upstream,
    emit,
    parse_catalog,
    run_batch,
)
from linktop.classify import CONNECTED_SUM, RATIONAL_HOMOLOGY_SPHERE, classify_link
from linktop.weights import make_weight_system

from conftest import TABLE1, TABLE3


def catalog_text(name):
    return resources.files("linktop").joinpath(f"data/{name}_catalog.csv").read_text()


def test_parse_examples():
    (e,) = parse_catalog(b"1,1,1,4,6,12,true\n")
    assert (e.weights, e.degree, e.ke_flag, e.source_line) == ((1, 1, 1, 4, 6), 12, True, 1)
    (e,) = parse_catalog("# comment\n\n13,143,775,620,465\n")
    assert (e.weights, e.degree, e.ke_flag, e.source_line) == ((13, 143, 775, 620, 465), None, None, 3)
    assert make_weight_system(e.weights, e.degree).degree == 2015
    (e,) = parse_catalog("1,1,1,4,6,false\n")
    assert e.degree is None and e.ke_flag is False


@pytest.mark.parametrize("line", ["1,1,x", "1,1,1,4,x", "1,1,1,4,6,12,maybe", "1,1,1,4,0", "1,1,1,4,6,12,true,9"])
def test_parse_errors(line):
    with pytest.raises(ParseError) as err:
        parse_catalog("1,1,1,4,6\n" + line + "\n")
    assert err.value.line == 2


def test_parse_header_and_jsonl():
    text = "w0,w1,w2,d,ke\n1,1,1,2,\n1,1,1,,true\n"
    a, b = parse_catalog(text)
    assert (a.weights, a.degree, a.ke_flag) == ((1, 1, 1), 2, None)
    assert (b.degree, b.ke_flag) == (None, True)
    (j,) = parse_catalog('{"weights": [1, 1, 1, 4, 6], "degree": 12, "ke": true}\n\n', "jsonl")
    assert j == CatalogEntry((1, 1, 1, 4, 6), 12, True, 1)
    with pytest.raises(ParseError):
        parse_catalog('{"weights": [1, -1]}\n', "jsonl")
    with pytest.raises(ParseError):
        parse_catalog("{not json}\n", "jsonl")
    with pytest.raises(ValueError):
        parse_catalog("", "xml")


def test_duplicates_warn(caplog):
    with caplog.at_level(logging.WARNING):
        entries = parse_catalog("1,1,1,4,6\n1,1,1,4,6\n")
    assert len(entries) == 2
    assert "duplicate" in caplog.text


def test_convert_upstream():
    text = "header line\n 1 1 1 4 6  KE\n 13 143 775 620 465 no\n 7 3 1 10 1 degree 21\n 1 2 3\n"
    got = convert_upstream(text)
    assert [(e.weights, e.ke_flag) for e in got] == [
        ((1, 1, 1, 4, 6), True),
        ((13, 143, 775, 620, 465), False),
        ((7, 3, 1, 10, 1), None),
    ]


def test_batch_tables():
    rows = run_batch(parse_catalog(catalog_text("table3")))
    assert [r.record.kind for r in rows] == [CONNECTED_SUM] * 8
    assert sorted(r.record.homology.rank for r in rows) == sorted([222, 252, 330, 148, 422, 480, 182, 240])
    rows = run_batch(parse_catalog(catalog_text("table1")))
    assert len(rows) == 52 and all(r.record.kind == RATIONAL_HOMOLOGY_SPHERE for r in rows)
    assert run_batch([]) == []


def test_batch_collects_errors_and_filters():
    entries = parse_catalog("1,1,1,4,6,12,true\n2,4,6,8,10,false\n1,1,1,4,6,5,false\n")
    rows = run_batch(entries)
    assert rows[0].record is not None and rows[0].record.ke_flag is True
    assert rows[1].record is None and "gcd" in rows[1].error.lower()
    assert rows[2].record is None and rows[2].error
    kept = run_batch(entries, filter_ke=True)
    assert [r.entry.source_line for r in kept] == [1]


def test_batch_worker_independence():
    entries = parse_catalog(catalog_text("table1"))
    one = emit((r.record for r in run_batch(entries, workers=1)), "jsonl")
    many = emit((r.record for r in run_batch(entries, workers=3)), "jsonl")
    assert one == many


def test_emit_markdown():
    assert emit([], "markdown").decode() == MARKDOWN_HEADER
    rec = classify_link(make_weight_system((77, 77, 333, 180, 27)))
    row = emit([rec], "markdown").decode().splitlines()[-1]
    assert row.endswith("| BP + Cycle | 693 | 4864 | (Z_77)^8 |")
    rec = classify_link(make_weight_system((1, 1, 1, 4, 6)))
    row = emit([rec], "markdown").decode().splitlines()[-1]
    assert row.endswith("| BP | 12 | 2662 | Z^222 |")


def test_emit_jsonl_and_csv():
    recs = [classify_link(r["ws"]) for r in TABLE3[:3]]
    lines = emit(recs, "jsonl").decode().splitlines()
    assert [json.loads(x)["mu"] for x in lines] == [str(r.mu) for r in recs]
    csv_text = emit(recs, "csv").decode()
    assert csv_text.splitlines()[0].startswith("w0,w1,w2,w3,w4,d,ke,")
    back = parse_catalog(csv_text)
    assert [(e.weights, e.degree) for e in back] == [(r.ws.weights, r.ws.degree) for r in recs]
    with pytest.raises(ValueError):
        emit(recs, "xml")


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(TABLE1 + TABLE3), max_size=6))
def test_csv_round_trip(rows):
    recs = [classify_link(r["ws"]) for r in rows]
    entries = parse_catalog(emit(recs, "csv"))
    again = [classify_link(make_weight_system(e.weights, e.degree)) for e in entries]
    assert emit(again, "csv") == emit(recs, "csv")
