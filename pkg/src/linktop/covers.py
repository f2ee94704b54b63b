"""Branched covers g = z^p + f and the diffeomorphism type of the resulting spheres."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .alexander import alexander_divisor
from .divisor import Divisor, ProductForm, eval_product_form, to_product_form
from .weights import WeightSystem, fano_index, make_weight_system


class CoprimalityViolated(ValueError):
    pass


class DimensionUnsupported(ValueError):
    pass


class WitnessNotFound(ValueError):
    pass


class SphereType(str, Enum):
    NOT_RATIONAL_HOMOLOGY_SPHERE = "NotRationalHomologySphere"
    RATIONAL_HOMOLOGY_SPHERE = "RationalHomologySphere"
    STANDARD = "StandardSphere"
    KERVAIRE = "KervaireSphere"
    UNDECIDABLE = "SphereUndecidable"


@dataclass(frozen=True)
class CoverRecord:
    p: int
    base: WeightSystem
    cover_ws: WeightSystem
    delta_one: int
    delta_minus_one: int
    sphere_type: SphereType

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "base_weights": list(self.base.weights),
            "base_degree": self.base.degree,
            "cover_weights": list(self.cover_ws.weights),
            "cover_degree": self.cover_ws.degree,
            "fano_index": fano_index(self.cover_ws),
            "delta_one": str(self.delta_one),
            "delta_minus_one": str(self.delta_minus_one),
            "sphere_type": self.sphere_type.value,
        }


def branch_cover(base: WeightSystem, p: int) -> WeightSystem:
    if p < 2:
        raise ValueError("p must be >= 2")
    g = gcd(p, base.degree)
    return make_weight_system((base.degree // g, *(p // g * w for w in base.weights)), lcm(p, base.degree))


def cover_fano_index(base: WeightSystem, p: int) -> Fraction:
    """|w_g| - d_g written through the base data."""
    g = gcd(p, base.degree)
    return Fraction(base.degree + p * fano_index(base), g)


def _require_coprime(base: WeightSystem, p: int):
    if gcd(p, base.degree) != 1:
        raise CoprimalityViolated(f"gcd(p={p}, d={base.degree}) != 1")


def cover_delta_form(base: WeightSystem, p: int) -> ProductForm:
    _require_coprime(base, p)
    return to_product_form((Divisor.lam(p) - 1) * alexander_divisor(base))


def cover_sphere_type(base: WeightSystem, p: int) -> SphereType:
    _require_coprime(base, p)
    # cover has base.m + 1 variables, so its n equals base.m
    if base.m % 2 == 0:
        raise DimensionUnsupported(f"cover of a {base.m}-variable base has even n")
    base_form = to_product_form(alexander_divisor(base))
    if base_form.mult_at_one() > 0:
        return SphereType.NOT_RATIONAL_HOMOLOGY_SPHERE
    if base.m != 5:
        return SphereType.UNDECIDABLE
    form = cover_delta_form(base, p)
    if abs(eval_product_form(form, 1)) != 1:
        return SphereType.RATIONAL_HOMOLOGY_SPHERE
    dm1 = eval_product_form(form, -1)
    assert dm1 != 0, "Delta_g(-1) vanished on a homotopy sphere"
    return _levine(dm1)


def _levine(delta_minus_one: int) -> SphereType:
    r = delta_minus_one % 8
    if r in (1, 7):
        return SphereType.STANDARD
    if r in (3, 5):
        return SphereType.KERVAIRE
    raise AssertionError(f"Delta(-1) = {delta_minus_one} is even")


def cover_record(base: WeightSystem, p: int) -> CoverRecord:
    form = cover_delta_form(base, p)
    return CoverRecord(
        p=p,
        base=base,
        cover_ws=branch_cover(base, p),
        delta_one=eval_product_form(form, 1),
        delta_minus_one=eval_product_form(form, -1),
        sphere_type=cover_sphere_type(base, p),
    )


@dataclass(frozen=True)
class EvenSplit:
    m2: int
    m3: int
    m2_vars: tuple[int, int, int]
    m3_vars: tuple[int, int]
    v: tuple[int, ...]  # w_i / m2 or w_i / m3, indexed like the weights
    n_w: int

    def predicted_divisor(self) -> Divisor:
        d = self.m2 * self.m3
        n = self.n_w
        return Divisor({d: n}) + Divisor({self.m3: 1}) - Divisor({self.m2: n}) - 1

    def predicted_torsion_order(self) -> int:
        return self.m3 ** (self.n_w + 1)


def _coprime_factorizations(d: int):
    for m2 in range(1, d + 1, 2):
        if d % m2 == 0 and gcd(m2, d // m2) == 1:
            yield m2, d // m2


def even_degree_splits(ws: WeightSystem) -> list[EvenSplit]:
    if ws.m != 5 or ws.degree % 2:
        return []
    w, d = ws.weights, ws.degree
    out = []
    for m2, m3 in _coprime_factorizations(d):
        if m3 % 2:
            continue
        on_m3 = [i for i in range(5) if w[i] % m3 == 0]
        on_m2 = [i for i in range(5) if w[i] % m2 == 0 and i not in on_m3]
        if len(on_m3) != 2 or len(on_m2) != 3:
            continue
        i3, i4 = on_m3
        v = tuple(w[i] // (m3 if i in on_m3 else m2) for i in range(5))
        n_w = Fraction(m2, v[i3] * v[i4]) - Fraction(1, v[i3]) - Fraction(1, v[i4])
        if n_w.denominator == 1 and n_w > 0:
            out.append(EvenSplit(m2, m3, tuple(on_m2), (i3, i4), v, int(n_w)))
    return out


def even_degree_split(ws: WeightSystem) -> EvenSplit | None:
    splits = even_degree_splits(ws)
    return splits[0] if splits else None


def cycle_block_witness(split: EvenSplit, ws: WeightSystem) -> tuple[int, int]:
    """Exponents (a3, a4) with d = w4 + a3*w3 = w3 + a4*w4 on the split's even pair."""
    i3, i4 = split.m3_vars
    w, d = ws.weights, ws.degree
    a3 = 1 + split.n_w * split.v[i4]
    a4 = 1 + split.n_w * split.v[i3]
    if d != w[i4] + a3 * w[i3] or d != w[i3] + a4 * w[i4]:
        raise WitnessNotFound(f"no 2-cycle on variables {split.m3_vars} of {ws}")
    return a3, a4


def two_cycle_relations(ws: WeightSystem) -> list[tuple[int, int, int, int]]:
    """All (i, j, a_i, a_j) with d = w_j + a_i w_i = w_i + a_j w_j, i < j."""
    w, d = ws.weights, ws.degree
    out = []
    for i in range(ws.m):
        for j in range(i + 1, ws.m):
            ri, rj = d - w[j], d - w[i]
            if ri > 0 and rj > 0 and ri % w[i] == 0 and rj % w[j] == 0:
                out.append((i, j, ri // w[i], rj // w[j]))
    return out
