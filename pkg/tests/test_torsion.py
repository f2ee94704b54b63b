from fractions import Fraction
from math import prod

import pytest

from linktop.alexander import alexander_data
from linktop.classify import coprime_fast_path
from linktop.torsion import HomologyGroup, format_homology, homology, orlik_c, orlik_k, orlik_torsion
from linktop.weights import UVData, make_weight_system, uv_data

from conftest import TABLE1, TABLE3

S = frozenset


def test_c_values_quadric():
    c = orlik_c(UVData((2, 2, 2), (1, 1, 1)))
    assert c[S()] == 2
    assert all(c[S({i})] == 1 for i in range(3))
    assert all(c[S({i, j})] == 1 for i, j in [(0, 1), (0, 2), (1, 2)])
    assert c[S({0, 1, 2})] == 0  # gcd of nothing; never used


def test_c_values_other():
    assert orlik_c(uv_data(make_weight_system((1, 1, 1, 4, 6))))[S()] == 1
    c = orlik_c(uv_data(make_weight_system((1945, 477, 1321, 148, 1871))))
    assert c[S()] == 5761
    assert all(v == 1 for s, v in c.items() if 0 < len(s) < 5)


def test_k_values_quadric():
    k = orlik_k(UVData((2, 2, 2), (1, 1, 1)))
    assert k[S()] == 1
    assert all(k[S({i})] == 0 for i in range(3))
    # signed sum 1 - 1 - 1 + 2
    assert all(k[S(p)] == 1 for p in [(0, 1), (0, 2), (1, 2)])
    assert k[S({0, 1, 2})] == 0


def test_k_full_set_and_even_n():
    for row in TABLE1[:5] + TABLE3[:3]:
        k = orlik_k(uv_data(row["ws"]))
        assert k[S(range(5))] == 0
        assert k[S()] == 1  # n = 4 is even
        assert all(isinstance(v, Fraction) for v in k.values())


def test_torsion_examples():
    assert orlik_torsion(uv_data(make_weight_system((1, 1, 1), 2))).d == (2,)
    # brute force: Delta = t + 1, so |H_1| = Delta(1) = 2
    assert alexander_data(make_weight_system((1, 1, 1), 2)).delta_one == 2
    d = orlik_torsion(uv_data(make_weight_system((13, 143, 775, 620, 465)))).d
    assert tuple(x for x in d if x != 1) == (13,) * 14
    d = orlik_torsion(uv_data(make_weight_system((1945, 477, 1321, 148, 1871)))).d
    assert tuple(x for x in d if x != 1) == (5761,)


@pytest.mark.parametrize(
    "w, rank, torsion",
    [
        ((1, 1, 1, 4, 6), 222, ()),
        ((2628, 1971, 4693, 95, 3097), 0, (657, 657)),
        ((9142, 3097, 1917, 4129, 149), 0, (18433,)),
    ],
)
def test_homology_examples(w, rank, torsion):
    assert homology(make_weight_system(w)) == HomologyGroup(rank, torsion)


def test_format_homology():
    assert format_homology(HomologyGroup(222, ())) == "Z^222"
    assert format_homology(HomologyGroup(0, (13,) * 14)) == "(Z_13)^14"
    assert format_homology(HomologyGroup(0, (5761,))) == "Z_5761"
    assert format_homology(HomologyGroup(2, (6, 3, 3))) == "Z^2 + Z_6 + (Z_3)^2"
    assert format_homology(HomologyGroup(0, ())) == "0"


@pytest.mark.parametrize("row", TABLE1 + TABLE3, ids=lambda r: r["weights"])
def test_torsion_invariants(row):
    ws = row["ws"]
    data = orlik_torsion(uv_data(ws))
    assert all(v >= 1 for s, v in data.c.items() if len(s) < ws.m)
    assert all(a % b == 0 for a, b in zip(data.d, data.d[1:]))
    h = homology(ws)
    if h.rank == 0:
        assert prod(h.torsion) == abs(alexander_data(ws).delta_one)
    fast = coprime_fast_path(ws)
    if fast is not None:
        assert fast == (h.rank, h.torsion)
        assert row["ws"].degree * (h.rank + 1) == int(row["mu"]) + 1
