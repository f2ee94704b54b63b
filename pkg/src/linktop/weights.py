"""Weight systems (w, d) and the per-variable (u, v) reduction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

MIN_VARS = 3
MAX_VARS = 8


class NonPrimitiveWeights(ValueError):
    pass


class InvalidDegree(ValueError):
    pass


class NonIntegralMilnor(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]
    degree: int

    @property
    def m(self) -> int:
        return len(self.weights)

    @property
    def n(self) -> int:
        return len(self.weights) - 1

    @property
    def link_dim(self) -> int:
        return 2 * self.n - 1

    def __str__(self):
        return f"w={self.weights}, d={self.degree}"


@dataclass(frozen=True)
class UVData:
    u: tuple[int, ...]
    v: tuple[int, ...]


def make_weight_system(w: Sequence[int], d: int | None = None) -> WeightSystem:
    """Validate weights and fill in the index-one degree ``sum(w) - 1`` if omitted."""
    w = tuple(int(x) for x in w)
    if not MIN_VARS <= len(w) <= MAX_VARS:
        raise ValueError(f"need {MIN_VARS}..{MAX_VARS} weights, got {len(w)}")
    if any(x < 1 for x in w):
        raise ValueError(f"weights must be positive: {w}")
    if gcd(*w) != 1:
        raise NonPrimitiveWeights(f"gcd{w} = {gcd(*w)}")
    if d is None:
        d = sum(w) - 1
    if d < 1:
        raise InvalidDegree(f"degree must be >= 1, got {d}")
    return WeightSystem(w, int(d))


def uv_data(ws: WeightSystem) -> UVData:
    d = ws.degree
    u = tuple(d // gcd(d, w) for w in ws.weights)
    v = tuple(w // gcd(d, w) for w in ws.weights)
    return UVData(u, v)


def milnor_number(ws: WeightSystem) -> int:
    mu = prod((Fraction(ws.degree, w) - 1 for w in ws.weights), start=Fraction(1))
    if mu.denominator != 1:
        raise NonIntegralMilnor(f"{ws}: product of (d/w_i - 1) is {mu}")
    return int(mu)


def fano_index(ws: WeightSystem) -> int:
    return sum(ws.weights) - ws.degree


def fano_positive(ws: WeightSystem) -> bool:
    return fano_index(ws) > 0


def is_coprime(ws: WeightSystem) -> bool:
    """True when gcd(d, w_i) = 1 for every weight."""
    return all(gcd(ws.degree, w) == 1 for w in ws.weights)
