from dataclasses import replace

import pytest

from linktop.classify import classify_link
from linktop.torsion import HomologyGroup
from linktop.verify import VerificationError, verify_link
from linktop.weights import make_weight_system

from conftest import TABLE3


@pytest.mark.parametrize("row", TABLE3, ids=lambda r: r["weights"])
def test_table3_rows_verify(row):
    done = verify_link(row["ws"])
    assert "betti-subsets" in done and "expansion-degree" in done


def test_small_systems_run_every_oracle():
    done = verify_link(make_weight_system((1, 1, 1), 2))
    assert {"bp-roots", "exhaustive-decompose", "torsion-order"} <= set(done)
    assert "coprime-closed-form" in verify_link(make_weight_system((1945, 477, 1321, 148, 1871)))


def test_tampered_record_fails():
    ws = make_weight_system((77, 77, 333, 180, 27))
    rec = classify_link(ws)
    with pytest.raises(VerificationError):
        verify_link(ws, replace(rec, mu=rec.mu + 1))
    with pytest.raises(VerificationError):
        verify_link(ws, replace(rec, homology=HomologyGroup(0, (77,) * 7)))
