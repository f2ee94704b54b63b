"""Brute-force references used to cross-check the main pipeline.

None of these share code paths with the divisor calculus or the ordering
search: BP spectra come from enumerating eigenvalue exponents, polynomials are
expanded coefficient by coefficient, and decompositions come from scanning
every exponent against every possible cofactor variable.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import gcd, prod

from .decompose import Block, Kind, SingularityDecomposition, canonicalize, cycle_parity_ok
from .divisor import Divisor, ProductForm
from .weights import WeightSystem

BP_LIMIT = 10**6
EXPAND_LIMIT = 50_000


class ScaleExceeded(ValueError):
    pass


class NotAPolynomial(ValueError):
    pass


def bp_root_multiset(exps) -> Counter:
    """Monodromy eigenvalues exp(2 pi i theta) of sum z_i^{a_i}, as theta -> multiplicity.

    Eigenvalues are prod_i exp(2 pi i k_i / a_i) for 0 < k_i < a_i.
    """
    exps = [int(a) for a in exps]
    if any(a < 2 for a in exps):
        raise ValueError("BP exponents must be >= 2")
    if prod(a - 1 for a in exps) > BP_LIMIT:
        raise ScaleExceeded(f"{prod(a - 1 for a in exps)} eigenvalues")
    roots: Counter = Counter()
    for ks in product(*(range(1, a) for a in exps)):
        theta = sum(Fraction(k, a) for k, a in zip(ks, exps)) % 1
        roots[theta] += 1
    return roots


def roots_to_divisor(roots: Counter) -> Divisor:
    """Rewrite a root multiset in the Lambda basis by Moebius inversion over periods.

    A root of exact order q belongs to every Lambda_j with q | j; the count of
    primitive q-th roots must be the same for each of them.
    """
    by_order: Counter = Counter()
    per_order_roots: dict[int, Counter] = {}
    for theta, mult in roots.items():
        q = Fraction(theta).denominator
        per_order_roots.setdefault(q, Counter())[theta] += mult
    for q, rs in per_order_roots.items():
        phi = sum(1 for k in range(q) if gcd(k, q) == 1)
        mults = set(rs.values())
        if len(rs) != phi or len(mults) != 1:
            raise ValueError(f"roots of order {q} are not Galois-stable")
        by_order[q] = mults.pop()
    # Lambda_j = sum_{q | j} (primitive q-th roots); invert top-down
    top = max(by_order, default=1)
    coeffs: dict[int, int] = {}
    for j in range(top, 0, -1):
        c = by_order.get(j, 0) - sum(coeffs.get(k, 0) for k in range(2 * j, top + 1, j))
        if c:
            coeffs[j] = c
    return Divisor(coeffs)


def bp_product_form(exps) -> ProductForm:
    div = roots_to_divisor(bp_root_multiset(exps))
    a = {j: int(c) for j, c in div.coeffs.items() if j != 1}
    return ProductForm(a, int(div.coeffs.get(1, 0)))


def _mul_cyclic(c: list[int], j: int) -> list[int]:
    # c(t) * (t^j - 1)
    out = [0] * (len(c) + j)
    for i, x in enumerate(c):
        out[i + j] += x
        out[i] -= x
    return out


def _div_cyclic(c: list[int], j: int) -> list[int]:
    # c(t) / (t^j - 1); raises if not exact
    n = len(c) - 1
    if n < j:
        raise NotAPolynomial(f"degree {n} < {j}")
    rem = list(c)
    q = [0] * (n - j + 1)
    for i in range(n, j - 1, -1):
        coef = rem[i]
        if coef:
            q[i - j] = coef
            rem[i] = 0
            rem[i - j] += coef
    if any(rem[:j]):
        raise NotAPolynomial(f"t^{j} - 1 does not divide")
    return q


def expand_polynomial(p: ProductForm) -> list[int]:
    """Coefficients (constant first) of (t-1)^e1 * prod (t^j-1)^a_j."""
    factors = [(1, p.e1)] + sorted(p.a.items())
    top = sum(j * e for j, e in factors if e > 0)
    if top > 2 * EXPAND_LIMIT:
        raise ScaleExceeded(f"intermediate degree {top}")
    c = [1]
    for j, e in factors:
        for _ in range(max(e, 0)):
            c = _mul_cyclic(c, j)
    for j, e in factors:
        for _ in range(max(-e, 0)):
            c = _div_cyclic(c, j)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def evaluate(coeffs: list[int], t: int) -> int:
    acc = 0
    for x in reversed(coeffs):
        acc = acc * t + x
    return acc


def _exponent_scan(d: int, w: int, pre: int) -> int | None:
    for a in range(1, d + 1):
        if a * w + pre == d:
            return a
    return None


def exhaustive_decompose(ws: WeightSystem) -> list[SingularityDecomposition]:
    """Every invertible polynomial for (w, d) by enumerating cofactor maps.

    Each variable i carries one monomial ``z_i^a`` or ``z_j z_i^a``; the map
    i -> j (or None) must be injective, and its graph then splits into paths
    (BP or chain) and cycles.
    """
    m, d, w = ws.m, ws.degree, ws.weights
    if m > 4 or d > 60:
        raise ScaleExceeded(f"m={m}, d={d}")
    options = []
    for i in range(m):
        opts = []
        for pre in [None, *range(m)]:
            if pre == i:
                continue
            a = _exponent_scan(d, w[i], 0 if pre is None else w[pre])
            if a is not None:
                opts.append((pre, a))
        options.append(opts)
    results = set()
    for choice in product(*options):
        pres = [pre for pre, _ in choice if pre is not None]
        if len(pres) != len(set(pres)):
            continue
        blocks = _blocks_from_pointers([c[0] for c in choice], [c[1] for c in choice])
        if blocks is not None:
            results.add(canonicalize(blocks))
    return sorted(results, key=lambda dec: tuple(b.sort_key() for b in dec.blocks))


def _blocks_from_pointers(pre: list, exps: list[int]) -> list[Block] | None:
    m = len(pre)
    succ = {p: i for i, p in enumerate(pre) if p is not None}
    blocks, seen = [], set()
    for i in range(m):
        if pre[i] is None:
            path = [i]
            while path[-1] in succ:
                path.append(succ[path[-1]])
            seen.update(path)
            es = [exps[v] for v in path]
            if es[0] < 2:
                return None
            kind = Kind.BP if len(path) == 1 else Kind.CHAIN
            blocks.append(Block(kind, tuple(path), tuple(es)))
    for i in range(m):
        if i in seen:
            continue
        cyc = [i]
        while succ[cyc[-1]] != i:
            cyc.append(succ[cyc[-1]])
        seen.update(cyc)
        es = [exps[v] for v in cyc]
        if not cycle_parity_ok(es):
            return None
        blocks.append(Block(Kind.CYCLE, tuple(cyc), tuple(es)))
    return blocks
