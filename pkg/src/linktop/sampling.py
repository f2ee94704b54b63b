"""Random invertible weight systems for property sweeps.

Weights are solved from the block equations with ``d`` normalized to 1 and
then cleared of denominators, so every sample has a decomposition by
construction.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, lcm

from .decompose import Kind, cycle_parity_ok
from .weights import WeightSystem


def block_weights(kind: Kind, exps) -> list[Fraction] | None:
    """Weights, relative to d = 1, forced by a single block; None if degenerate."""
    if kind is Kind.BP:
        return [Fraction(1, exps[0])]
    if kind is Kind.CHAIN:
        w = [Fraction(1, exps[0])]
        for a in exps[1:]:
            w.append((1 - w[-1]) / a)
        return w
    # around a cycle each weight is affine in the first: w_j = p_j + q_j * w_0
    p, q = [Fraction(0)], [Fraction(1)]
    for a in exps[1:]:
        p.append((1 - p[-1]) / a)
        q.append(-q[-1] / a)
    x, c = (1 - p[-1]) / exps[0], -q[-1] / exps[0]
    if c == 1:
        return None
    w0 = x / (1 - c)
    return [pi + qi * w0 for pi, qi in zip(p, q)]


def random_coprime_system(
    rng: random.Random, m: int = 5, max_exp: int = 40, max_degree: int = 10**5
) -> WeightSystem | None:
    """One draw of a single m-variable chain or cycle with gcd(d, w_i) = 1 for all i.

    Returns None when the draw is rejected; callers loop until they have enough.
    """
    kind = rng.choice([Kind.CHAIN, Kind.CYCLE])
    exps = [rng.randint(1, max_exp) for _ in range(m)]
    if kind is Kind.CHAIN and exps[0] < 2:
        return None
    if kind is Kind.CYCLE and not cycle_parity_ok(exps):
        return None
    w = block_weights(kind, exps)
    if w is None or any(v <= 0 for v in w):
        return None
    den = lcm(*(v.denominator for v in w))
    ints = [int(v * den) for v in w]
    g = gcd(den, *ints)
    ints, d = [i // g for i in ints], den // g
    if d > max_degree or any(gcd(d, x) != 1 for x in ints):
        return None
    rng.shuffle(ints)
    return WeightSystem(tuple(ints), d)


def coprime_systems(count: int, seed: int = 2024, **kwargs) -> list[WeightSystem]:
    rng = random.Random(seed)
    out: list[WeightSystem] = []
    while len(out) < count:
        ws = random_coprime_system(rng, **kwargs)
        if ws is not None:
            out.append(ws)
    return out
