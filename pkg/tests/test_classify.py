from itertools import combinations

import pytest

from linktop.classify import (
    CONNECTED_SUM,
    HOMOTOPY_SPHERE,
    INTEGRAL_HOMOLOGY_SPHERE,
    MIXED,
    RATIONAL_HOMOLOGY_SPHERE,
    UNDETERMINED,
    classify_link,
    coprime_fast_path,
    find_twins,
)
from linktop.torsion import format_homology
from linktop.weights import make_weight_system, milnor_number

from conftest import TABLE1, TABLE3


@pytest.mark.parametrize(
    "w, kind, h, mu",
    [
        ((77, 77, 333, 180, 27), RATIONAL_HOMOLOGY_SPHERE, "(Z_77)^8", 4864),
        ((1, 1, 6, 14, 21), CONNECTED_SUM, "Z^480", 20172),
        ((11, 3, 5, 14, 1), CONNECTED_SUM, "Z^148", 4864),
    ],
)
def test_classify_examples(w, kind, h, mu):
    rec = classify_link(make_weight_system(w))
    assert rec.kind == kind
    assert format_homology(rec.homology) == h
    assert rec.mu == mu
    assert not rec.warnings


def test_kind_labels():
    assert classify_link(make_weight_system((1, 1, 6, 14, 21))).kind_label == "ConnectedSumS3xS4(480)"
    # the 5-dim link of z^2 + z^3 + ... is a homotopy sphere
    assert classify_link(make_weight_system((15, 10, 6, 6), 30)).kind == HOMOTOPY_SPHERE
    # Poincare sphere: the Delta(1) = 1 criterion does not give S^3 in dimension 3
    assert classify_link(make_weight_system((15, 10, 6), 30)).kind == INTEGRAL_HOMOLOGY_SPHERE


def test_mixed_and_undetermined():
    # 5-dim quadric-type link: rank > 0 is not of the S3xS4 form
    rec = classify_link(make_weight_system((1, 1, 1, 1), 3))
    assert rec.homology.rank > 0 and rec.kind == MIXED
    rec = classify_link(make_weight_system((1, 2, 3, 4, 5), 12))
    assert rec.homology.torsion == (2, 2) and rec.kind == MIXED


def test_nine_dimensional_homotopy_sphere():
    # Delta = (L6 - L2 - L3 + 1) has no (t - 1) factor and Delta(1) = 1
    rec = classify_link(make_weight_system((2, 3, 3, 3, 3, 3), 6))
    assert rec.supported and rec.ws.link_dim == 9 and rec.kind == HOMOTOPY_SPHERE


def test_unsupported_leaves_torsion_open():
    rec = classify_link(make_weight_system((1, 1, 1, 4), 7))
    assert not rec.supported and rec.label == "unsupported" and rec.polynomial == ""
    assert rec.homology.rank == 24 and rec.homology.torsion is None and rec.warnings
    assert rec.kind == UNDETERMINED
    assert format_homology(rec.homology) == "Z^24 + T?"
    assert rec.as_dict()["torsion"] is None


def test_fast_path_examples():
    assert coprime_fast_path(make_weight_system((1945, 477, 1321, 148, 1871))) == (0, (5761,))
    ws = make_weight_system((2387, 1579, 661, 148, 771))
    assert coprime_fast_path(ws) == (0, (5545,))
    assert milnor_number(ws) == 5544
    assert coprime_fast_path(make_weight_system((13, 143, 775, 620, 465))) is None
    assert coprime_fast_path(make_weight_system((1, 1, 1), 2)) is None


@pytest.mark.parametrize("row", TABLE1 + TABLE3, ids=lambda r: r["weights"])
def test_fast_path_agrees_with_pipeline(row):
    ws = row["ws"]
    fast = coprime_fast_path(ws)
    if fast is None:
        return
    rec = classify_link(ws)
    b3, torsion = fast
    assert (rec.homology.rank, rec.homology.torsion) == (b3, torsion)
    assert rec.mu + 1 == ws.degree * (b3 + 1)


def test_table_kinds():
    assert all(classify_link(r["ws"]).kind == RATIONAL_HOMOLOGY_SPHERE for r in TABLE1)
    recs = [classify_link(r["ws"]) for r in TABLE3]
    assert all(r.kind == CONNECTED_SUM for r in recs)
    assert sorted(r.homology.rank for r in recs) == sorted([222, 252, 330, 148, 422, 480, 182, 240])
    assert all(r.homology.rank % 2 == 0 for r in recs)


def test_twin_examples():
    recs = [classify_link(r["ws"]) for r in TABLE1]
    groups = {g.key: g for g in find_twins(recs)}
    pair = groups[(5545, 5544, 5545)]
    assert {m.ws.weights for m in pair.members} == {(2323, 1611, 562, 151, 899), (2387, 1579, 661, 148, 771)}
    assert all(m.label == "Cycle" for m in pair.members)
    pair = groups[(5375, 15792, 43**4)]
    assert {m.ws.weights for m in pair.members} == {(43, 1333, 1875, 500, 1625), (43, 1333, 2375, 1000, 625)}
    for g in groups.values():
        assert len(g.members) >= 2
        assert len({(m.ws.degree, m.mu, m.homology.order) for m in g.members}) == 1
    assert find_twins(recs[:1]) == []
    assert find_twins(recs) == find_twins(list(reversed(recs)))


def test_twins_ignore_positive_rank():
    recs = [classify_link(r["ws"]) for r in TABLE3]
    assert find_twins(recs + recs) == []


def test_non_cycle_twins_share_leading_weights():
    recs = [classify_link(r["ws"]) for r in TABLE1]
    for g in find_twins(recs):
        if any("Cycle" != m.label for m in g.members):
            for a, b in combinations(g.members, 2):
                if a.label != "Cycle" and b.label != "Cycle":
                    assert a.ws.weights[:2] == b.ws.weights[:2]
