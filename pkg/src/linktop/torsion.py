"""Orlik's torsion recipe for the middle homology of the link.

Subsets of variable indices are encoded as bitmasks.  The c-values are built
by increasing subset size, since each one divides by the c-values of all
proper subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, prod

from .alexander import betti_via_form, subset_term
from .weights import UVData, WeightSystem, uv_data


class NonIntegralOrlikC(ArithmeticError):
    pass


@dataclass(frozen=True)
class OrlikData:
    c: dict[frozenset[int], int]
    k: dict[frozenset[int], Fraction]
    r: int
    d: tuple[int, ...]


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] | None  # None: torsion not determined

    @property
    def order(self) -> int | None:
        """Order of the torsion subgroup."""
        return None if self.torsion is None else prod(self.torsion)

    def __str__(self):
        return format_homology(self)


def _members(mask: int, m: int) -> tuple[int, ...]:
    return tuple(i for i in range(m) if mask >> i & 1)


def _proper_submasks(mask: int):
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _c_by_mask(u: tuple[int, ...]) -> dict[int, int]:
    m = len(u)
    full = (1 << m) - 1
    order = sorted(range(1 << m), key=lambda s: bin(s).count("1"))
    c: dict[int, int] = {}
    for mask in order:
        # gcd() of no arguments is 0, which only happens for the full set
        g = gcd(*(u[i] for i in range(m) if not mask >> i & 1))
        if mask == 0:
            c[0] = g
            continue
        denom = prod(c[s] for s in _proper_submasks(mask))
        if mask == full:
            c[mask] = 0
            continue
        q, r = divmod(g, denom)
        if r or q < 1:
            raise NonIntegralOrlikC(f"c for {_members(mask, m)}: {g}/{denom}")
        c[mask] = q
    return c


def _epsilon(q: int) -> int:
    return q % 2


def _k_by_mask(uv: UVData) -> dict[int, Fraction]:
    m = len(uv.u)
    n = m - 1
    terms = {mask: subset_term(uv.u, uv.v, _members(mask, m)) for mask in range(1 << m)}
    k: dict[int, Fraction] = {}
    for mask in range(1 << m):
        s = bin(mask).count("1")
        eps = _epsilon(n - s + 1)
        if not eps:
            k[mask] = Fraction(0)
            continue
        total = Fraction(0)
        for sub in [mask, *_proper_submasks(mask)] if mask else [0]:
            t = bin(sub).count("1")
            total += (-1) ** (s - t) * terms[sub]
        k[mask] = total
    return k


def _as_sets(table: dict[int, object], m: int) -> dict[frozenset[int], object]:
    return {frozenset(_members(mask, m)): val for mask, val in table.items()}


def orlik_c(uv: UVData) -> dict[frozenset[int], int]:
    return _as_sets(_c_by_mask(uv.u), len(uv.u))


def orlik_k(uv: UVData) -> dict[frozenset[int], Fraction]:
    return _as_sets(_k_by_mask(uv), len(uv.u))


def orlik_torsion(uv: UVData) -> OrlikData:
    m = len(uv.u)
    c = _c_by_mask(uv.u)
    k = _k_by_mask(uv)
    r = max(0, floor(max(k.values())))
    d = tuple(prod(c[mask] for mask in c if k[mask] >= j) for j in range(1, r + 1))
    return OrlikData(c=_as_sets(c, m), k=_as_sets(k, m), r=r, d=d)


def homology(ws: WeightSystem) -> HomologyGroup:
    data = orlik_torsion(uv_data(ws))
    return HomologyGroup(betti_via_form(ws), tuple(x for x in data.d if x != 1))


def format_homology(h: HomologyGroup) -> str:
    """Render as e.g. ``Z^222``, ``(Z_13)^14``, ``Z_5761`` or ``Z^2 + (Z_3)^2``."""
    parts = []
    if h.rank:
        parts.append("Z" if h.rank == 1 else f"Z^{h.rank}")
    if h.torsion is None:
        parts.append("T?")
    else:
        for q, count in run_lengths(h.torsion):
            parts.append(f"Z_{q}" if count == 1 else f"(Z_{q})^{count}")
    return " + ".join(parts) if parts else "0"


def run_lengths(seq) -> list[tuple[int, int]]:
    out: list[list[int]] = []
    for x in seq:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(x, c) for x, c in out]
