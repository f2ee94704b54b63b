"""Alexander polynomial of a weighted homogeneous link, as a divisor and a product form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import lcm, prod
from typing import Sequence

from .divisor import (
    Divisor,
    ProductForm,
    eval_product_form,
    factor_divisor,
    to_product_form,
)
from .weights import UVData, WeightSystem, uv_data


@dataclass(frozen=True)
class AlexanderData:
    divisor: Divisor
    form: ProductForm
    betti: int
    delta_one: int
    delta_minus_one: int


def divisor_from_uv(u: Sequence[int], v: Sequence[int]) -> Divisor:
    return reduce(lambda acc, f: acc * f, (factor_divisor(ui, vi) for ui, vi in zip(u, v)), Divisor.one())


def alexander_divisor(ws: WeightSystem) -> Divisor:
    uv = uv_data(ws)
    return divisor_from_uv(uv.u, uv.v)


def alexander_form(ws: WeightSystem) -> ProductForm:
    return to_product_form(alexander_divisor(ws))


def betti_via_form(ws: WeightSystem) -> int:
    return alexander_form(ws).mult_at_one()


def subset_term(u: Sequence[int], v: Sequence[int], idx: Sequence[int]) -> Fraction:
    """prod u / (prod v * lcm u) over ``idx``; the empty subset contributes 1."""
    if not idx:
        return Fraction(1)
    return Fraction(prod(u[i] for i in idx), prod(v[i] for i in idx) * lcm(*(u[i] for i in idx)))


def betti_from_uv(uv: UVData) -> int:
    m = len(uv.u)
    total = Fraction(0)
    for s in range(m + 1):
        sign = -1 if (m - s) % 2 else 1
        for idx in combinations(range(m), s):
            total += sign * subset_term(uv.u, uv.v, idx)
    if total.denominator != 1:
        raise ArithmeticError(f"subset Betti sum is not integral: {total}")
    return int(total)


def betti_via_subsets(ws: WeightSystem) -> int:
    return betti_from_uv(uv_data(ws))


def delta_values(ws: WeightSystem) -> tuple[int, int]:
    form = alexander_form(ws)
    return eval_product_form(form, 1), eval_product_form(form, -1)


def alexander_data(ws: WeightSystem) -> AlexanderData:
    div = alexander_divisor(ws)
    form = to_product_form(div)
    return AlexanderData(
        divisor=div,
        form=form,
        betti=form.mult_at_one(),
        delta_one=eval_product_form(form, 1),
        delta_minus_one=eval_product_form(form, -1),
    )
