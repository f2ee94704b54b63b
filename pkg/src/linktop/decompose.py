"""Invertible-polynomial representations of a weight system.

A representation is a Thom-Sebastiani sum of blocks in disjoint variables:

* ``BP``     z_i^a                                   (a >= 2)
* ``Chain``  z_{i1}^{a1} + z_{i1} z_{i2}^{a2} + ...  (a1 >= 2, rest >= 1)
* ``Cycle``  z_{ik} z_{i1}^{a1} + z_{i1} z_{i2}^{a2} + ... + z_{i(k-1)} z_{ik}^{ak}

Every monomial must have weighted degree ``d``.  Since each exponent is
forced by the weights (``a = (d - w_prev) / w``), the search is over variable
orderings only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .weights import WeightSystem, make_weight_system


class Kind(str, Enum):
    BP = "BP"
    CHAIN = "Chain"
    CYCLE = "Cycle"


_KIND_ORDER = {Kind.BP: 0, Kind.CHAIN: 1, Kind.CYCLE: 2}


@dataclass(frozen=True)
class Block:
    kind: Kind
    vars: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.vars) != len(self.exps) or not self.vars:
            raise ValueError("vars and exps must be parallel and nonempty")
        if any(a < 1 for a in self.exps):
            raise ValueError(f"exponents must be positive: {self.exps}")
        k = len(self.vars)
        if self.kind is Kind.BP:
            if k != 1 or self.exps[0] < 2:
                raise ValueError("BP block needs one variable with exponent >= 2")
        elif self.kind is Kind.CHAIN:
            if k < 2:
                raise ValueError("a chain of length 1 is a BP block")
            if self.exps[0] < 2:
                raise ValueError("chain head exponent must be >= 2")
        elif self.kind is Kind.CYCLE:
            if k < 2:
                raise ValueError("a cycle needs at least two variables")
            if not cycle_parity_ok(self.exps):
                raise ValueError(f"even cycle violates the parity rule: {self.exps}")

    def sort_key(self):
        return (_KIND_ORDER[self.kind], min(self.vars), self.vars, self.exps)

    def canonical(self) -> "Block":
        if self.kind is not Kind.CYCLE:
            return self
        r = self.vars.index(min(self.vars))
        return Block(self.kind, self.vars[r:] + self.vars[:r], self.exps[r:] + self.exps[:r])


def cycle_parity_ok(exps) -> bool:
    """Even-length cycles may not have all odd-position or all even-position exponents equal to 1."""
    k = len(exps)
    if k % 2:
        return True
    # positions are 1-based in the usual normal form
    odd = exps[0::2]
    even = exps[1::2]
    return not (all(a == 1 for a in even) or all(a == 1 for a in odd))


@dataclass(frozen=True)
class SingularityDecomposition:
    blocks: tuple[Block, ...]

    @property
    def label(self) -> str:
        return type_label(self)

    def kinds(self) -> list[Kind]:
        return [b.kind for b in self.blocks]

    def count(self, kind: Kind) -> int:
        return sum(1 for b in self.blocks if b.kind is kind)


def canonicalize(blocks) -> SingularityDecomposition:
    return SingularityDecomposition(tuple(sorted((b.canonical() for b in blocks), key=Block.sort_key)))


def monomial_degrees(block: Block, w) -> list[int]:
    vs, es, k = block.vars, block.exps, len(block.vars)
    out = []
    for j in range(k):
        deg = es[j] * w[vs[j]]
        if block.kind is Kind.CYCLE:
            deg += w[vs[j - 1]]
        elif block.kind is Kind.CHAIN and j > 0:
            deg += w[vs[j - 1]]
        out.append(deg)
    return out


def verify_decomposition(dec: SingularityDecomposition, ws: WeightSystem) -> bool:
    seen = sorted(v for b in dec.blocks for v in b.vars)
    if seen != list(range(ws.m)):
        return False
    return all(deg == ws.degree for b in dec.blocks for deg in monomial_degrees(b, ws.weights))


def _exponent(d: int, w: int, pre: int = 0) -> int | None:
    rest = d - pre
    if rest <= 0 or rest % w:
        return None
    return rest // w


def _chains(ws: WeightSystem, avail: frozenset[int], head: int) -> Iterator[Block]:
    """All chains (length >= 2) starting at ``head`` inside ``avail``."""
    w, d = ws.weights, ws.degree
    a0 = _exponent(d, w[head])
    if a0 is None or a0 < 2:
        return

    def extend(path, exps):
        if len(path) >= 2:
            yield Block(Kind.CHAIN, tuple(path), tuple(exps))
        for nxt in avail - set(path):
            a = _exponent(d, w[nxt], w[path[-1]])
            if a is not None:
                yield from extend(path + [nxt], exps + [a])

    yield from extend([head], [a0])


def _cycles(ws: WeightSystem, avail: frozenset[int], start: int) -> Iterator[Block]:
    """All cycles through ``start`` (as the smallest variable) inside ``avail``."""
    w, d = ws.weights, ws.degree

    def extend(path, exps):
        # exps[j] belongs to path[j] for j >= 1; path[0]'s exponent is fixed on closing
        if len(path) >= 2:
            a_first = _exponent(d, w[path[0]], w[path[-1]])
            if a_first is not None:
                full = (a_first, *exps[1:])
                if cycle_parity_ok(full):
                    yield Block(Kind.CYCLE, tuple(path), full)
        for nxt in avail - set(path):
            if nxt < start:
                continue
            a = _exponent(d, w[nxt], w[path[-1]])
            if a is not None:
                yield from extend(path + [nxt], exps + [a])

    yield from extend([start], [0])


def _blocks_containing(ws: WeightSystem, avail: frozenset[int], first: int) -> Iterator[Block]:
    a = _exponent(ws.degree, ws.weights[first])
    if a is not None and a >= 2:
        yield Block(Kind.BP, (first,), (a,))
    for other in avail:
        # chains are ordered: ``first`` may sit anywhere, so start from every head
        for ch in _chains(ws, avail, other):
            if first in ch.vars:
                yield ch
    yield from _cycles(ws, avail, first)


def find_decompositions(ws: WeightSystem) -> list[SingularityDecomposition]:
    """Every representation of ``ws`` as BP/chain/cycle blocks, canonically sorted."""
    found: set[SingularityDecomposition] = set()

    def rec(avail: frozenset[int], acc: list[Block]):
        if not avail:
            found.add(canonicalize(acc))
            return
        first = min(avail)
        for block in _blocks_containing(ws, avail, first):
            rec(avail - set(block.vars), acc + [block])

    rec(frozenset(range(ws.m)), [])
    return sorted(found, key=_dec_sort_key)


def _dec_sort_key(dec: SingularityDecomposition):
    return tuple(b.sort_key() for b in dec.blocks)


def _in_index_order(block: Block) -> bool:
    return list(block.vars) == list(range(block.vars[0], block.vars[0] + len(block.vars)))


def preferred_key(dec: SingularityDecomposition):
    """Simplest representation first: fewest cycles, then fewest chains, then
    blocks running over consecutive increasing variables, then longest blocks."""
    unordered = sum(1 for b in dec.blocks if not _in_index_order(b))
    return (dec.count(Kind.CYCLE), dec.count(Kind.CHAIN), unordered, len(dec.blocks), _dec_sort_key(dec))


def preferred_decomposition(ws: WeightSystem) -> SingularityDecomposition | None:
    decs = find_decompositions(ws)
    return min(decs, key=preferred_key) if decs else None


def type_label(dec: SingularityDecomposition) -> str:
    tokens = []
    if any(b.kind is Kind.BP for b in dec.blocks):
        tokens.append(Kind.BP.value)
    tokens += [b.kind.value for b in dec.blocks if b.kind is Kind.CHAIN]
    tokens += [b.kind.value for b in dec.blocks if b.kind is Kind.CYCLE]
    return " + ".join(tokens)


def _power(var: int, a: int) -> str:
    return f"z{var}" if a == 1 else f"z{var}^{a}"


def render_polynomial(dec: SingularityDecomposition, ws: WeightSystem | None = None) -> str:
    """Monomials in table style, ordered by the variable carrying the exponent."""
    terms = []
    for b in dec.blocks:
        k = len(b.vars)
        for j, (v, a) in enumerate(zip(b.vars, b.exps)):
            if b.kind is Kind.CYCLE or (b.kind is Kind.CHAIN and j > 0):
                pre = b.vars[j - 1] if j > 0 else b.vars[k - 1]
                terms.append((v, f"z{pre} {_power(v, a)}"))
            else:
                terms.append((v, _power(v, a)))
    return "+".join(t for _, t in sorted(terms))


def thom_sebastiani_extend(ws: WeightSystem, k: int) -> WeightSystem:
    """Weight system of z_0^2 + ... + z_{k-1}^2 + f."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return ws
    d = ws.degree
    if d % 2 == 0:
        return make_weight_system((d // 2,) * k + ws.weights, d)
    return make_weight_system((d,) * k + tuple(2 * w for w in ws.weights), 2 * d)
