"""Torus weights of SO(2n) representations and their total Chern classes.

The centrepiece is the coefficient ``d_n`` of the Euler monomial
``z_1...z_n`` in the product ``prod (1 + sum e_i z_i)`` over sign vectors
with an even number of ``+1`` entries. It is computed three ways: directly
from the truncated product, through Kutin's reduction to one fewer
variable, and from the closed form ``2^(n-1) (n-1)!``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from . import kernels
from .polyarith import MultiPoly

MAX_PRODUCT_N = 16


class WeightLabel(Enum):
    STANDARD = "standard"
    LAMBDA = "lambda"
    DPLUS_EXTREME = "dplus-extreme"
    CUSTOM = "custom"


@dataclass(frozen=True)
class WeightSystem:
    """A multiset of integer linear forms in ``z_1..z_n``, one tuple per weight."""

    n: int
    weights: tuple[tuple[int, ...], ...]
    label: WeightLabel = WeightLabel.CUSTOM
    k: int | None = None

    def __post_init__(self):
        for w in self.weights:
            if len(w) != self.n:
                raise ValueError(f"weight {w} does not have length {self.n}")

    def __len__(self):
        return len(self.weights)

    def sorted_weights(self) -> list[tuple[int, ...]]:
        return sorted(self.weights, reverse=True)


def _unit(n, i, s):
    v = [0] * n
    v[i] = s
    return tuple(v)


def weights_standard(n: int) -> WeightSystem:
    if n < 1:
        raise ValueError("n must be positive")
    ws = tuple(_unit(n, i, s) for i in range(n) for s in (1, -1))
    return WeightSystem(n, ws, WeightLabel.STANDARD)


def weights_lambda(n: int, k: int) -> WeightSystem:
    """Weights of the k-th exterior power: sums of k distinct standard weights."""
    if not 0 <= k <= 2 * n:
        raise ValueError(f"k={k} outside 0..{2 * n}")
    std = weights_standard(n).weights
    ws = tuple(
        tuple(sum(col) for col in zip(*combo)) if combo else (0,) * n
        for combo in itertools.combinations(std, k)
    )
    return WeightSystem(n, ws, WeightLabel.LAMBDA, k)


def dplus_sign_vectors(n: int) -> list[tuple[int, ...]]:
    """All +-1 vectors of length n with an even number of +1 entries."""
    return [s for s in itertools.product((1, -1), repeat=n) if s.count(1) % 2 == 0]


def weights_dplus_extreme(n: int) -> WeightSystem:
    if n < 1:
        raise ValueError("n must be positive")
    return WeightSystem(n, tuple(dplus_sign_vectors(n)), WeightLabel.DPLUS_EXTREME)


def total_chern(ws: WeightSystem, max_degree: int | None = None) -> MultiPoly:
    """``prod_{w in ws} (1 + w)``, optionally dropping terms above ``max_degree``."""
    factors = [w for w in ws.weights if any(w)]
    cap = -1 if max_degree is None else max_degree
    return MultiPoly(kernels.linear_product(factors, ws.n, cap), ws.n)


def _check_product_range(n: int):
    if not 2 <= n <= MAX_PRODUCT_N:
        raise ValueError(f"n={n} outside 2..{MAX_PRODUCT_N}")


def euler_coefficient_product(n: int) -> int:
    """Coefficient of ``z_1...z_n`` in the even-(+1) product, via the square-free fold."""
    _check_product_range(n)
    coeffs = kernels.linear_fold_multilinear(dplus_sign_vectors(n), n)
    return coeffs[(1 << n) - 1]


def euler_coefficient_closed(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return 2 ** (n - 1) * math.factorial(n - 1)


def kutin_factors(n: int) -> list[tuple[int, ...]]:
    """Sign vectors on ``n-1`` variables, all except the all-minus one."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return [s for s in itertools.product((1, -1), repeat=n - 1) if s.count(1) > 0]


def kutin_g(n: int) -> MultiPoly:
    return MultiPoly(kernels.linear_product(kutin_factors(n), n - 1), n - 1)


def euler_coefficient_kutin(n: int) -> int:
    """Fix ``z_n`` to come from ``1 - z_1 - ... - z_n``, count the ``2^(n-1)``
    equally contributing factors, and read the rest off ``g`` in ``n-1`` variables."""
    _check_product_range(n)
    coeffs = kernels.linear_fold_multilinear(kutin_factors(n), n - 1)
    return -(2 ** (n - 1)) * coeffs[(1 << (n - 1)) - 1]


def _stage_choice(m: int, j: int) -> tuple[int, ...]:
    # the factor picked for z_j: +1 on the first j coordinates, -1 after
    return (1,) * j + (-1,) * (m - j)


def kutin_pairing_audit(n: int, i: int) -> int:
    """Count the factors left at stage ``i`` that have no partner differing only at ``z_i``.

    The factors of ``g`` already used for ``z_1..z_{i-1}``, and the all-minus
    factor used for ``z_n``, are gone by stage ``i``.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"i={i} outside 1..{n - 1}")
    m = n - 1
    gone = {(-1,) * m} | {_stage_choice(m, j) for j in range(1, i)}
    remaining = [s for s in itertools.product((1, -1), repeat=m) if s not in gone]
    alive = set(remaining)
    unpaired = 0
    for s in remaining:
        partner = s[: i - 1] + (-s[i - 1],) + s[i:]
        if partner not in alive:
            unpaired += 1
    return unpaired


def even_sign_substitution(f: MultiPoly, signs) -> MultiPoly:
    """``f(a_1 z_1, ..., a_n z_n)``."""
    terms = {}
    for m, c in f.terms.items():
        for e, a in zip(m, signs):
            if e & 1 and a < 0:
                c = -c
        terms[m] = c
    return MultiPoly._raw(terms, f.nvars)
