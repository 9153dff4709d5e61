"""The Weyl group W(D_n) and the torus-level isotropic flag pushforward.

W(D_n) is the group of signed permutations of ``z_1..z_n`` with an even
number of sign changes; it has ``2^(n-1) * n!`` elements. The pushforward
along the full isotropic flag bundle is modelled by alternating
symmetrization followed by exact division by the type-D Vandermonde
``prod_{i<j} (z_j^2 - z_i^2)``.

Torus conventions: the hyperplane class ``h_j`` restricts to ``z_j`` and
``c_n(V')`` of the maximal isotropic subbundle restricts to ``z_1...z_n``.
With these choices and the sign of the Vandermonde above, the
Edidin-Graham input ``h_2^2 h_3^4 ... h_n^(2n-2) c_n(V')`` pushes forward
to ``+2^(n-1) z_1...z_n``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .polyarith import MultiPoly, VariableCountMismatch, exact_div

MAX_ENUM_N = 8


class NotInvariantError(ValueError):
    pass


@dataclass(frozen=True)
class SignedPermutation:
    """``z_i -> signs[i] * z_{perm[i]}`` (0-based indices)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad sign vector {self.signs}")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(n)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def in_weyl_D(self) -> bool:
        return self.signs.count(-1) % 2 == 0

    def perm_sign(self) -> int:
        return _perm_sign(self.perm)

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        # act(self * other, f) == act(self, act(other, f))
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return SignedPermutation(perm, signs)


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def weyl_order(n: int) -> int:
    return 2 ** (n - 1) * math.factorial(n)


def _check_bound(n: int):
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n={n} outside the enumeration bound 1..{MAX_ENUM_N}")


def even_sign_vectors(n: int) -> list[tuple[int, ...]]:
    """Sign vectors with an even number of -1 entries, lexicographic with +1 first."""
    return [s for s in itertools.product((1, -1), repeat=n) if s.count(-1) % 2 == 0]


def iter_weyl_D(n: int):
    _check_bound(n)
    signs = even_sign_vectors(n)
    for perm in itertools.permutations(range(n)):
        for s in signs:
            yield SignedPermutation(perm, s)


def enumerate_weyl_D(n: int) -> list[SignedPermutation]:
    """All of W(D_n), ordered lexicographically by (perm, signs)."""
    return list(iter_weyl_D(n))


def act(w: SignedPermutation, f: MultiPoly) -> MultiPoly:
    if f.nvars != w.n:
        raise VariableCountMismatch(f"group acts on {w.n} variables, polynomial has {f.nvars}")
    terms: dict = {}
    perm, signs = w.perm, w.signs
    for m, c in f.terms.items():
        b = [0] * w.n
        for i, e in enumerate(m):
            b[perm[i]] = e
            if e & 1 and signs[i] < 0:
                c = -c
        terms[tuple(b)] = c
    return MultiPoly._raw(terms, f.nvars)


@lru_cache(maxsize=None)
def _group_tables(n: int):
    perms = list(itertools.permutations(range(n)))
    perm_signs = [_perm_sign(p) for p in perms]
    sign_masks = [
        sum(1 << i for i, s in enumerate(v) if s < 0) for v in even_sign_vectors(n)
    ]
    return perms, perm_signs, sign_masks


@lru_cache(maxsize=None)
def type_d_vandermonde(n: int) -> MultiPoly:
    """``prod_{i<j} (z_j^2 - z_i^2)``."""
    delta = MultiPoly.one(n)
    for j in range(n):
        zj2 = MultiPoly.var(j, n) ** 2
        for i in range(j):
            delta = delta * (zj2 - MultiPoly.var(i, n) ** 2)
    return delta


def alternating_sum(f: MultiPoly, n: int) -> MultiPoly:
    """``sum over w in W(D_n) of sgn(perm(w)) * act(w, f)``."""
    perms, perm_signs, sign_masks = _group_tables(n)
    return MultiPoly._raw(kernels.symmetrize_dn(f.terms, n, perms, perm_signs, sign_masks), n)


@dataclass(frozen=True)
class PushforwardResult:
    value: MultiPoly
    fiber_degree_drop: int


def pushforward_flag(f: MultiPoly, n: int) -> PushforwardResult:
    """Push ``f`` forward along the full isotropic flag bundle of a rank-2n quadratic bundle.

    The numerator is anti-invariant, so the division by the type-D
    Vandermonde is exact for every input; a :class:`NotDivisibleError`
    escaping from here means the symmetrization is broken.
    """
    if f.nvars != n:
        raise VariableCountMismatch(f"expected {n} variables, got {f.nvars}")
    if n < 2:
        raise ValueError("pushforward needs n >= 2")
    _check_bound(n)
    value = exact_div(alternating_sum(f, n), type_d_vandermonde(n))
    return PushforwardResult(value, n * n - n)


def flag_class_s(n: int) -> MultiPoly:
    """Torus representative ``z_2^2 z_3^4 ... z_n^(2n-2)`` of ``h_2^2 ... h_n^(2n-2)``."""
    return MultiPoly._raw({tuple(2 * j for j in range(n)): 1}, n)


def euler_monomial(n: int) -> MultiPoly:
    return MultiPoly._raw({(1,) * n: 1}, n)


def eg_class_input(n: int) -> MultiPoly:
    """``z_1 z_2^3 z_3^5 ... z_n^(2n-1)``: the class whose pushforward is the Edidin-Graham class."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return MultiPoly._raw({tuple(2 * j + 1 for j in range(n)): 1}, n)


def _generators(n: int) -> list[SignedPermutation]:
    # adjacent transpositions plus the double sign change on z_1, z_2
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(SignedPermutation(tuple(p), (1,) * n))
    if n >= 2:
        gens.append(SignedPermutation(tuple(range(n)), (-1, -1) + (1,) * (n - 2)))
    return gens


def is_invariant(f: MultiPoly, n: int) -> bool:
    """True iff every element of W(D_n) fixes ``f``; checked on a generating set."""
    if f.nvars != n:
        raise VariableCountMismatch(f"expected {n} variables, got {f.nvars}")
    return all(act(g, f) == f for g in _generators(n))


def _halve(terms: dict, n: int) -> MultiPoly:
    return MultiPoly._raw({tuple(e // 2 for e in m): c for m, c in terms.items()}, n)


@lru_cache(maxsize=None)
def _elementary(n: int) -> list[MultiPoly]:
    """``e_1..e_n`` in ``n`` variables."""
    out = []
    for k in range(1, n + 1):
        terms = {}
        for idx in itertools.combinations(range(n), k):
            m = [0] * n
            for i in idx:
                m[i] = 1
            terms[tuple(m)] = 1
        out.append(MultiPoly._raw(terms, n))
    return out


def symmetric_to_elementary(f: MultiPoly) -> MultiPoly:
    """Write a symmetric polynomial as a polynomial in ``e_1..e_n``.

    Repeatedly strips the lex-leading term ``c x^a`` with
    ``c * e_1^(a1-a2) ... e_n^an``. Raises if ``f`` is not symmetric.
    """
    n = f.nvars
    es = _elementary(n)
    powers: dict = {}

    def epow(j, k):
        if (j, k) not in powers:
            powers[(j, k)] = es[j] ** k
        return powers[(j, k)]

    result: dict = {}
    rem = f
    while rem:
        lead, c = rem.leading()
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise NotInvariantError(f"not symmetric: leading monomial {lead}")
        k = tuple(lead[j] - lead[j + 1] for j in range(n - 1)) + (lead[-1],)
        sub = MultiPoly.constant(c, n)
        for j, kj in enumerate(k):
            if kj:
                sub = sub * epow(j, kj)
        rem = rem - sub
        result[k] = c
    return MultiPoly._raw(result, n)


def decompose_invariant(f: MultiPoly, n: int) -> tuple[MultiPoly, MultiPoly]:
    """Split a W(D_n)-invariant ``f`` as ``A(p) + e * B(p)``.

    ``p_j = e_j(z_1^2, ..., z_n^2)`` and ``e = z_1...z_n``. ``A`` and ``B``
    are returned as polynomials in ``n`` variables read as ``p_1..p_n``.
    """
    if not is_invariant(f, n):
        raise NotInvariantError("polynomial is not W(D_n)-invariant")
    even: dict = {}
    odd: dict = {}
    for m, c in f.terms.items():
        if all(e % 2 == 0 for e in m):
            even[m] = c
        else:
            # invariance forces every exponent odd here
            odd[tuple(e - 1 for e in m)] = c
    a = symmetric_to_elementary(_halve(even, n))
    b = symmetric_to_elementary(_halve(odd, n))
    if recombine(a, b, n) != f:
        raise ArithmeticError("decomposition does not reconstruct the input")
    return a, b


@lru_cache(maxsize=None)
def squared_elementary(n: int) -> tuple[MultiPoly, ...]:
    """``p_1..p_n`` as polynomials in ``z``."""
    squares = [MultiPoly.var(i, n) ** 2 for i in range(n)]
    return tuple(e.compose(squares) for e in _elementary(n))


def recombine(a: MultiPoly, b: MultiPoly, n: int) -> MultiPoly:
    ps = list(squared_elementary(n))
    return a.compose(ps) + euler_monomial(n) * b.compose(ps)
