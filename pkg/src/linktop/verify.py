"""Re-derive a link record through the brute-force oracles where scale permits."""

from __future__ import annotations

from math import prod

from . import oracle
from .alexander import alexander_data, betti_via_subsets
from .classify import LinkRecord, classify_link, coprime_fast_path
from .decompose import Kind, find_decompositions
from .divisor import degree_of
from .weights import WeightSystem


class VerificationError(AssertionError):
    pass


def verify_link(ws: WeightSystem, record: LinkRecord | None = None) -> list[str]:
    """Run every applicable cross-check; return the names of those run.

    Raises VerificationError on the first disagreement.
    """
    rec = record or classify_link(ws)
    alex = alexander_data(ws)
    done = []

    def check(name, ok, detail=""):
        if not ok:
            raise VerificationError(f"{name} failed for {ws} {detail}")
        done.append(name)

    check("betti-subsets", betti_via_subsets(ws) == alex.betti)
    check("degree-is-mu", degree_of(alex.form) == rec.mu)
    if rec.homology.rank == 0 and rec.homology.torsion is not None:
        check("torsion-order", abs(alex.delta_one) == prod(rec.homology.torsion))

    if rec.mu <= oracle.EXPAND_LIMIT:
        coeffs = oracle.expand_polynomial(alex.form)
        check("expansion-degree", len(coeffs) - 1 == rec.mu)
        check("expansion-at-1", oracle.evaluate(coeffs, 1) == alex.delta_one)
        check("expansion-at-minus-1", oracle.evaluate(coeffs, -1) == alex.delta_minus_one)

    for dec in find_decompositions(ws):
        if all(b.kind is Kind.BP for b in dec.blocks):
            exps = [b.exps[0] for b in sorted(dec.blocks, key=lambda b: b.vars[0])]
            if prod(a - 1 for a in exps) <= oracle.BP_LIMIT:
                check("bp-roots", oracle.bp_product_form(exps) == alex.form)
            break

    if ws.m <= 4 and ws.degree <= 60:
        check("exhaustive-decompose", oracle.exhaustive_decompose(ws) == find_decompositions(ws))

    fast = coprime_fast_path(ws)
    if fast is not None and rec.homology.torsion is not None:
        check("coprime-closed-form", fast == (rec.homology.rank, rec.homology.torsion))
    return done
