"""The compiled and pure-Python kernels must agree bit for bit."""
import itertools
import random

import pytest

from chowbso import kernels
from chowbso.kernels import python_backend as py
from chowbso.weylflag import _group_tables

backends = [py]
if kernels.compiled_backend is not None:
    backends.append(kernels.compiled_backend)

needs_compiled = pytest.mark.skipif(kernels.compiled_backend is None, reason="extension not built")


def random_terms(rng, n, k=6, max_exp=5):
    return {tuple(rng.randint(0, max_exp) for _ in range(n)): rng.randint(-9, 9) or 1 for _ in range(k)}


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetrize_agrees(n):
    rng = random.Random(n)
    tables = _group_tables(n)
    for _ in range(20):
        terms = random_terms(rng, n)
        assert kernels.compiled_backend.symmetrize_dn(terms, n, *tables) == py.symmetrize_dn(terms, n, *tables)


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_fold_agrees(n):
    rng = random.Random(100 + n)
    factors = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(12)]
    assert kernels.compiled_backend.linear_fold_multilinear(factors, n) == py.linear_fold_multilinear(factors, n)


@needs_compiled
def test_fold_overflow_falls_back_to_big_ints():
    factors = [(2**40, 2**40)] * 3
    got = kernels.compiled_backend.linear_fold_multilinear(factors, 2)
    assert got == py.linear_fold_multilinear(factors, 2)
    assert got[3] == 6 * 2**80


@needs_compiled
@pytest.mark.parametrize("n, cap", [(2, -1), (3, -1), (4, 3), (4, -1), (5, 5)])
def test_linear_product_agrees(n, cap):
    rng = random.Random(200 + n)
    factors = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(10)]
    assert kernels.compiled_backend.linear_product(factors, n, cap) == py.linear_product(factors, n, cap)


@needs_compiled
def test_linear_product_overflow_falls_back():
    factors = [(3**39, 1)] * 4
    got = kernels.compiled_backend.linear_product(factors, 2)
    assert got == py.linear_product(factors, 2)
    assert got[(4, 0)] == 3**156


@pytest.mark.parametrize("backend", backends, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def test_fold_matches_full_expansion(backend):
    factors = list(itertools.product((1, -1), repeat=3))
    full = py.linear_product(factors, 3)
    folded = backend.linear_fold_multilinear(factors, 3)
    for mask in range(8):
        key = tuple((mask >> i) & 1 for i in range(3))
        assert folded[mask] == full.get(key, 0)


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
