"""Seeded random inputs for the verification suites."""
from __future__ import annotations

import random

from .polyarith import MultiPoly
from .ringpres import PresentedRing
from .weylflag import recombine


def _p_monomials(n: int, max_weight: int):
    """Exponent vectors k on p_1..p_n with sum(2 j k_j) <= max_weight."""
    out = []

    def rec(j, left, acc):
        if j > n:
            out.append(tuple(acc))
            return
        for k in range(left // (2 * j) + 1):
            acc.append(k)
            rec(j + 1, left - 2 * j * k, acc)
            acc.pop()

    if max_weight >= 0:
        rec(1, max_weight, [])
    return out


def random_invariant(n: int, rng: random.Random, max_degree: int = 6) -> MultiPoly:
    """A nonzero W(D_n)-invariant polynomial of degree at most ``max_degree``."""
    a_monos = _p_monomials(n, max_degree)
    b_monos = _p_monomials(n, max_degree - n)
    while True:
        a = {m: rng.randint(-5, 5) for m in rng.sample(a_monos, min(3, len(a_monos)))}
        b = {m: rng.randint(-5, 5) for m in rng.sample(b_monos, min(2, len(b_monos)))}
        f = recombine(MultiPoly(a, n), MultiPoly(b, n), n)
        if f:
            return f


def random_raw(ring: PresentedRing, rng: random.Random, max_degree: int = 12, nterms: int = 6):
    """An unreduced list of ``(monomial, coefficient)`` pairs, duplicates included.

    Special-class exponents up to 3 and odd classes are deliberately common
    so that every rewrite rule gets exercised.
    """
    degs = ring.degrees
    raw = []
    for _ in range(nterms):
        m = [0] * ring.width
        budget = rng.randint(0, max_degree)
        for _ in range(4):
            k = rng.randrange(ring.width)
            if degs[k] <= budget:
                m[k] += 1
                budget -= degs[k]
        if rng.random() < 0.3 and budget >= 2 * ring.n:
            m[-1] += 2
        raw.append((tuple(m), rng.randint(-7, 7)))
    if raw and rng.random() < 0.5:
        raw.append((raw[0][0], rng.randint(-7, 7)))
    return raw


def random_element(ring: PresentedRing, rng: random.Random, max_degree: int = 12):
    return ring.normalize(random_raw(ring, rng, max_degree))
