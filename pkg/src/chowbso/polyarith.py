"""Sparse multivariate polynomials with exact integer coefficients.

A monomial is a tuple of ``nvars`` non-negative exponents; variable index
``i`` (0-based) is printed as ``z{i+1}`` by default. Polynomials are
immutable and always held in canonical sparse form: a dict from monomial
to nonzero ``int``.
"""
from __future__ import annotations

import heapq
from collections.abc import Mapping, Sequence
from operator import add as _add
from operator import sub as _sub

from .expr import ParseError, parse_expression

__all__ = [
    "Monomial",
    "MultiPoly",
    "NotDivisibleError",
    "VariableCountMismatch",
    "add",
    "coefficient_of",
    "exact_div",
    "monomial",
    "mul",
    "mul_multilinear_truncated",
    "parse_poly",
    "truncate_multilinear",
]

Monomial = tuple  # tuple[int, ...] of length nvars


class VariableCountMismatch(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    """Exact division failed; ``remainder`` is the nonzero division remainder."""

    def __init__(self, dividend: MultiPoly, divisor: MultiPoly, remainder: MultiPoly):
        super().__init__(f"{divisor} does not divide {dividend}; remainder {remainder}")
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder


def monomial(nvars: int, exponents: Mapping[int, int] | Sequence[int]) -> Monomial:
    """Build a monomial key from either a dense sequence or a sparse ``{index: exp}`` map."""
    if isinstance(exponents, Mapping):
        exps = [0] * nvars
        for i, e in exponents.items():
            if not 0 <= i < nvars:
                raise IndexError(f"variable index {i} outside 0..{nvars - 1}")
            if e < 0:
                raise ValueError("negative exponent")
            exps[i] = e
        return tuple(exps)
    exps = tuple(exponents)
    if len(exps) != nvars:
        raise VariableCountMismatch(f"monomial has {len(exps)} exponents, expected {nvars}")
    if any(e < 0 for e in exps):
        raise ValueError("negative exponent")
    return exps


def _grlex_key(m: Monomial):
    # ascending total degree, then z1 before z2 within a degree
    return (sum(m), tuple(-e for e in m))


class MultiPoly:
    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, nvars: int = 0):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != nvars:
                        raise VariableCountMismatch(
                            f"monomial {m} does not have {nvars} exponents"
                        )
                    clean[m] = c
        self.terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> MultiPoly:
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int, nvars: int) -> MultiPoly:
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls._raw({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> MultiPoly:
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> MultiPoly:
        """The variable with 0-based index ``i`` (printed ``z{i+1}``)."""
        return cls._raw({monomial(nvars, {i: 1}): 1}, nvars)

    @classmethod
    def linear(cls, coeffs: Sequence[int], const: int = 0) -> MultiPoly:
        """``const + sum(coeffs[i] * z_{i+1})``."""
        nvars = len(coeffs)
        terms = {}
        if const:
            terms[(0,) * nvars] = const
        for i, c in enumerate(coeffs):
            if c:
                terms[monomial(nvars, {i: 1})] = c
        return cls._raw(terms, nvars)

    def __repr__(self):
        return f"MultiPoly({self.format()!r}, nvars={self.nvars})"

    def __str__(self):
        return self.format()

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise VariableCountMismatch(f"nvars {self.nvars} != {other.nvars}")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly._raw(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw({m: c * other for m, c in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        get = terms.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(_add, m1, m2))
                terms[m] = get(m, 0) + c1 * c2
        return MultiPoly._raw({m: c for m, c in terms.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> MultiPoly:
        return MultiPoly._raw({m: c for m, c in self.terms.items() if sum(m) == d}, self.nvars)

    def coefficient(self, m) -> int:
        if isinstance(m, Mapping):
            m = monomial(self.nvars, m)
        return self.terms.get(tuple(m), 0)

    def leading(self) -> tuple[Monomial, int]:
        """Lex-largest term."""
        m = max(self.terms)
        return m, self.terms[m]

    def compose(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Substitute ``images[i]`` for variable ``i``."""
        if len(images) != self.nvars:
            raise VariableCountMismatch(f"need {self.nvars} images, got {len(images)}")
        if not self.terms:
            return MultiPoly.zero(images[0].nvars if images else 0)
        target = images[0].nvars if images else 0
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.one(target)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        result = MultiPoly.zero(target)
        for m, c in self.terms.items():
            t = MultiPoly.constant(c, target)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            result = result + t
        return result

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: _grlex_key(mc[0]))

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"z{i + 1}" for i in range(self.nvars)]
        return format_terms(self.sorted_terms(), names)


def format_terms(terms: Sequence[tuple[Monomial, int]], names: Sequence[str]) -> str:
    """Render ordered ``(monomial, coefficient)`` pairs, e.g. ``1 - 2*z1*z2 + z2^2``."""
    if not terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(terms):
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if k == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def _check(a: MultiPoly, b: MultiPoly):
    if a.nvars != b.nvars:
        raise VariableCountMismatch(f"nvars {a.nvars} != {b.nvars}")


def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    _check(a, b)
    return a + b


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    _check(a, b)
    return a * b


def truncate_multilinear(p: MultiPoly) -> MultiPoly:
    """Drop every monomial that is not square-free."""
    return MultiPoly._raw({m: c for m, c in p.terms.items() if max(m, default=0) <= 1}, p.nvars)


def mul_multilinear_truncated(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """``truncate_multilinear(a * b)`` without materialising the discarded terms.

    Both inputs must already be square-free. Iterating this against factors
    of degree at most one in each variable preserves every square-free
    coefficient of the full product, in particular the top one.
    """
    _check(a, b)
    terms: dict = {}
    get = terms.get
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            m = tuple(map(_add, m1, m2))
            if 2 in m:
                continue
            terms[m] = get(m, 0) + c1 * c2
    return MultiPoly._raw({m: c for m, c in terms.items() if c}, a.nvars)


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Return ``q`` with ``q * b == a``; raise :class:`NotDivisibleError` otherwise.

    Lex-order division by a single divisor. A nonzero remainder always means
    ``b`` does not divide ``a``, so callers that rely on exactness should let
    the exception propagate.
    """
    _check(a, b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = b.leading()
    rest = [(m, c) for m, c in b.terms.items() if m != lm]
    work = dict(a.terms)
    heap = [tuple(-e for e in m) for m in work]
    heapq.heapify(heap)
    quotient: dict = {}
    remainder: dict = {}
    while heap:
        m = tuple(-e for e in heapq.heappop(heap))
        c = work.pop(m, 0)
        if not c:
            continue
        shift = tuple(map(_sub, m, lm))
        if any(e < 0 for e in shift) or c % lc:
            remainder[m] = c
            continue
        q = c // lc
        quotient[shift] = q
        for m2, c2 in rest:
            t = tuple(map(_add, shift, m2))
            if t not in work:
                heapq.heappush(heap, tuple(-e for e in t))
            v = work.get(t, 0) - q * c2
            work[t] = v
    if remainder:
        raise NotDivisibleError(a, b, MultiPoly(remainder, a.nvars))
    return MultiPoly._raw(quotient, a.nvars)


def coefficient_of(a: MultiPoly, m) -> int:
    return a.coefficient(m)


def parse_poly(text: str, nvars: int, alphabet: str | Sequence[str] = "z") -> MultiPoly:
    """Parse ``text`` into a polynomial in ``nvars`` variables.

    ``alphabet="z"`` accepts ``z1..z{nvars}``; a sequence of names maps
    ``names[i]`` to variable ``i``. Ring-generator alphabets with
    rewriting live in :mod:`chowbso.ringpres`.
    """
    if alphabet == "z":
        names = [f"z{i + 1}" for i in range(nvars)]
    else:
        names = list(alphabet)
        if len(names) != nvars:
            raise VariableCountMismatch(f"{len(names)} names for {nvars} variables")
    index = {name: i for i, name in enumerate(names)}

    def variable(name, pos):
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", pos)
        return MultiPoly.var(index[name], nvars)

    return parse_expression(text, lambda c: MultiPoly.constant(c, nvars), variable)
