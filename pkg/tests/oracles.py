"""Brute-force reference implementations used only by the tests.

None of these go through Smith normal form; they enumerate finite groups
directly or search boxes of integer vectors.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import gcd


def rational_det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def span_mod(generators, modulus: int, dim: int) -> set:
    """Subgroup of (Z/modulus)^dim generated by the given vectors."""
    gens = [tuple(x % modulus for x in g) for g in generators]
    seen = {(0,) * dim}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % modulus for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def quotient_order_profile(big: set, small: set, modulus: int) -> tuple[int, Counter]:
    """|big/small| and the multiset of element orders of the quotient."""
    small_list = list(small)
    cosets = {}
    for v in big:
        key = min(tuple((a + b) % modulus for a, b in zip(v, s)) for s in small_list)
        cosets.setdefault(key, v)
    orders = Counter()
    for v in cosets.values():
        k, w = 1, v
        while w not in small:
            w = tuple((a + b) % modulus for a, b in zip(w, v))
            k += 1
        orders[k] += 1
    return len(cosets), orders


def cyclic_product_profile(factors) -> tuple[int, Counter]:
    orders = Counter()
    for e in product(*[range(f) for f in factors]):
        k = 1
        for x, f in zip(e, factors):
            o = f // gcd(x, f)
            k = k * o // gcd(k, o)
        orders[k] += 1
    return sum(orders.values()), orders


def box(rank: int, bound: int):
    return product(range(-bound, bound + 1), repeat=rank)


def rank1_integer_kernel(rows, r: int):
    """Integer kernel of an integer matrix with r <= 2 columns (brute force)."""
    rows = [tuple(x) for x in rows if any(x)]
    if not rows:
        return [tuple(int(i == j) for j in range(r)) for i in range(r)]
    if r == 1:
        return []
    a, b = rows[0]
    g = gcd(a, b)
    v = (b // g, -a // g)
    if all(x * v[0] + y * v[1] == 0 for x, y in rows):
        return [v]
    return []
