"""Exact divisor ring spanned by the period classes Lambda_n = div(t^n - 1).

A divisor is stored as a mapping ``period -> Fraction``.  The constant ``1``
of the ring is ``Lambda_1`` (the single root ``t = 1``), so the constant term
of an expanded divisor lives under period 1.

Multiplication follows Lambda_a * Lambda_b = gcd(a, b) * Lambda_lcm(a, b),
extended bilinearly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping


class NonIntegralDivisor(ValueError):
    pass


class PoleAtPoint(ValueError):
    pass


def _clean(coeffs: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
    out = {}
    for period, c in coeffs.items():
        if period < 1:
            raise ValueError(f"period must be >= 1, got {period}")
        c = Fraction(c)
        if c:
            out[int(period)] = c
    return out


@dataclass(frozen=True)
class Divisor:
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    @classmethod
    def lam(cls, n: int, coeff: Fraction | int = 1) -> "Divisor":
        return cls({n: Fraction(coeff)})

    @classmethod
    def one(cls) -> "Divisor":
        return cls({1: Fraction(1)})

    def __eq__(self, other):
        if isinstance(other, int):
            other = Divisor.lam(1, other)
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "Divisor | int") -> "Divisor":
        if isinstance(other, int):
            other = Divisor.lam(1, other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return Divisor(out)

    __radd__ = __add__

    def __neg__(self) -> "Divisor":
        return Divisor({p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: "Divisor | int") -> "Divisor":
        if isinstance(other, int):
            other = Divisor.lam(1, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "Divisor":
        return Divisor.lam(1, other) - self

    def __mul__(self, other: "Divisor | int | Fraction") -> "Divisor":
        if isinstance(other, (int, Fraction)):
            return Divisor({p: c * other for p, c in self.coeffs.items()})
        return lambda_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Divisor":
        if k < 0:
            raise ValueError("negative powers are not defined in the divisor ring")
        out = Divisor.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def periods(self) -> list[int]:
        return sorted(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Divisor(0)"
        terms = []
        for p in sorted(self.coeffs, reverse=True):
            c = self.coeffs[p]
            terms.append(f"{c}" if p == 1 else f"{c}*L{p}")
        return "Divisor(" + " + ".join(terms) + ")"


def lambda_mul(x: Divisor, y: Divisor) -> Divisor:
    out: dict[int, Fraction] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            m = lcm(a, b)
            out[m] = out.get(m, 0) + gcd(a, b) * ca * cb
    return Divisor(out)


def factor_divisor(u: int, v: int) -> Divisor:
    """The factor ``Lambda_u / v - 1`` contributed by one variable."""
    if u < 1 or v < 1:
        raise ValueError("u and v must be positive")
    return Divisor({u: Fraction(1, v)}) - 1


@dataclass(frozen=True)
class ProductForm:
    """Delta(t) = (t - 1)^e1 * prod_j (t^j - 1)^a_j, with periods j >= 2 in ``a``."""

    a: Mapping[int, int] = field(default_factory=dict)
    e1: int = 0

    def __post_init__(self):
        clean = {}
        for j, aj in self.a.items():
            if j < 2:
                raise ValueError("periods in a product form must be >= 2; use e1 for j = 1")
            if aj:
                clean[int(j)] = int(aj)
        object.__setattr__(self, "a", clean)

    def mult_at_one(self) -> int:
        return self.e1 + sum(self.a.values())

    def mult_at_minus_one(self) -> int:
        return sum(aj for j, aj in self.a.items() if j % 2 == 0)

    def to_divisor(self) -> Divisor:
        coeffs = {j: Fraction(aj) for j, aj in self.a.items()}
        if self.e1:
            coeffs[1] = Fraction(self.e1)
        return Divisor(coeffs)


def to_product_form(d: Divisor) -> ProductForm:
    if not d.is_integral():
        bad = {p: c for p, c in d.coeffs.items() if c.denominator != 1}
        raise NonIntegralDivisor(f"non-integral coefficients {bad}")
    a = {p: int(c) for p, c in d.coeffs.items() if p != 1}
    e1 = int(d.coeffs.get(1, 0))
    return ProductForm(a, e1)


def degree_of(p: ProductForm) -> int:
    return sum(j * aj for j, aj in p.a.items()) + p.e1


def eval_product_form(p: ProductForm, t0: int) -> int:
    """Exact Delta(t0) for t0 in {1, -1} without expanding the polynomial.

    Each factor (t^j - 1) is split into its (t - t0) part and a cofactor whose
    value at t0 is known in closed form: j at t = 1, and -2 (j odd) or -j
    (j even) at t = -1.
    """
    if t0 == 1:
        m = p.mult_at_one()
        if m < 0:
            raise PoleAtPoint(f"root multiplicity {m} at t=1")
        if m > 0:
            return 0
        num, den = 1, 1
        for j, aj in p.a.items():
            if aj > 0:
                num *= j**aj
            else:
                den *= j ** (-aj)
        return _exact_quotient(num, den)
    if t0 == -1:
        m = p.mult_at_minus_one()
        if m < 0:
            raise PoleAtPoint(f"root multiplicity {m} at t=-1")
        if m > 0:
            return 0
        num, den = 1, 1
        factors = [(-2, p.e1)] + [(-2 if j % 2 else -j, aj) for j, aj in p.a.items()]
        for value, e in factors:
            if e > 0:
                num *= value**e
            elif e < 0:
                den *= value ** (-e)
        return _exact_quotient(num, den)
    raise ValueError("only t0 = 1 and t0 = -1 are supported")


def _exact_quotient(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise PoleAtPoint(f"value {Fraction(num, den)} is not an integer")
    return q
