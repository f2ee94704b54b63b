"""Full link records: decomposition, Milnor number, homology and topological kind."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from .alexander import alexander_data
from .decompose import (
    SingularityDecomposition,
    find_decompositions,
    preferred_key,
    render_polynomial,
    type_label,
)
from .torsion import HomologyGroup, format_homology, orlik_torsion
from .weights import WeightSystem, is_coprime, milnor_number, uv_data

log = logging.getLogger(__name__)

RATIONAL_HOMOLOGY_SPHERE = "RationalHomologySphere"
HOMOTOPY_SPHERE = "HomotopySphere"
INTEGRAL_HOMOLOGY_SPHERE = "IntegralHomologySphere"
CONNECTED_SUM = "ConnectedSumS3xS4"
MIXED = "Mixed"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class LinkRecord:
    ws: WeightSystem
    decomposition: SingularityDecomposition | None
    mu: int
    homology: HomologyGroup
    kind: str
    delta_one: int
    delta_minus_one: int
    ke_flag: bool | None = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def supported(self) -> bool:
        return self.decomposition is not None

    @property
    def label(self) -> str:
        return type_label(self.decomposition) if self.decomposition else "unsupported"

    @property
    def polynomial(self) -> str:
        return render_polynomial(self.decomposition, self.ws) if self.decomposition else ""

    @property
    def kind_label(self) -> str:
        return f"{CONNECTED_SUM}({self.homology.rank})" if self.kind == CONNECTED_SUM else self.kind

    def as_dict(self) -> dict:
        h = self.homology
        return {
            "weights": list(self.ws.weights),
            "degree": self.ws.degree,
            "polynomial": self.polynomial,
            "type": self.label,
            "mu": str(self.mu),
            "rank": h.rank,
            "torsion": None if h.torsion is None else [str(x) for x in h.torsion],
            "homology": format_homology(h),
            "kind": self.kind_label,
            "delta_one": str(self.delta_one),
            "delta_minus_one": str(self.delta_minus_one),
            "ke": self.ke_flag,
            "warnings": list(self.warnings),
        }


def link_kind(ws: WeightSystem, h: HomologyGroup, delta_one: int) -> str:
    if h.rank == 0:
        # rank 0 is decided by Delta(1) alone; Orlik's recipe is not needed
        if abs(delta_one) != 1:
            return RATIONAL_HOMOLOGY_SPHERE
        return HOMOTOPY_SPHERE if ws.link_dim >= 5 else INTEGRAL_HOMOLOGY_SPHERE
    if h.torsion is None:
        return UNDETERMINED
    if ws.link_dim == 7 and not h.torsion:
        return CONNECTED_SUM
    return MIXED


def classify_link(ws: WeightSystem, ke_flag: bool | None = None) -> LinkRecord:
    decs = find_decompositions(ws)
    dec = min(decs, key=preferred_key) if decs else None
    alex = alexander_data(ws)
    mu = milnor_number(ws)
    warnings = []
    if dec is not None:
        torsion = tuple(x for x in orlik_torsion(uv_data(ws)).d if x != 1)
    else:
        torsion = None
        warnings.append("no invertible-polynomial representation; torsion not determined")
        log.warning("%s: unsupported, torsion left undetermined", ws)
    h = HomologyGroup(alex.betti, torsion)
    kind = link_kind(ws, h, alex.delta_one)
    if kind == CONNECTED_SUM and h.rank % 2:
        warnings.append(f"odd rank {h.rank} for a connected sum of S3xS4")
        log.warning("%s: odd rank %d", ws, h.rank)
    return LinkRecord(ws, dec, mu, h, kind, alex.delta_one, alex.delta_minus_one, ke_flag, tuple(warnings))


def _elementary_symmetric(ws_weights, k: int) -> int:
    return sum(prod(c) for c in combinations(ws_weights, k))


def coprime_fast_path(ws: WeightSystem) -> tuple[int, tuple[int, ...]] | None:
    """(b3, torsion) for five weights all coprime to d, from the closed form in d and S_k."""
    if ws.m != 5 or not is_coprime(ws):
        return None
    w, d = ws.weights, ws.degree
    p = prod(w)
    s1, s2, s3, s4 = (_elementary_symmetric(w, k) for k in range(1, 5))
    b3 = Fraction(s4 - s3 * d + s2 * d**2 - s1 * d**3 + d**4, p) - 1
    if b3.denominator != 1:
        raise ArithmeticError(f"{ws}: closed-form b3 = {b3} is not an integer")
    return int(b3), (d,)


@dataclass(frozen=True)
class TwinGroup:
    key: tuple[int, int, int]
    members: tuple[LinkRecord, ...]


def find_twins(records) -> list[TwinGroup]:
    """Group rational homology spheres by (d, mu, |H|); only groups of two or more."""
    groups: dict[tuple[int, int, int], list[LinkRecord]] = defaultdict(list)
    for rec in records:
        if rec.homology.rank != 0:
            continue
        order = rec.homology.order
        if order is None:
            order = abs(rec.delta_one)
        groups[(rec.ws.degree, rec.mu, order)].append(rec)
    return [
        TwinGroup(k, tuple(sorted(v, key=lambda r: r.ws.weights)))
        for k, v in sorted(groups.items())
        if len(v) >= 2
    ]
