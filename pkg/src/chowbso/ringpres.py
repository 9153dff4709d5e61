"""Normal forms in the presented Chow ring of BSO(2n) and its cohomology image.

Chow ring::

    Z[c_2, ..., c_2n, y] / (2 c_odd, y c_odd, y^2 - K c_2n),  K = (-1)^n 2^(2n-2)

Cohomology subring::

    Z[c_2, ..., c_2n, e] / (2 c_odd, e^2 - (-1)^n c_2n)

``c_1`` is not a generator at all. A generator monomial is stored as a
tuple of length ``2n``: exponents of ``c_2..c_2n`` followed by the exponent
of the special class (``y`` or ``e``). In canonical form the special
exponent is at most one, and any monomial containing an odd Chern class
has coefficient 1 (Chow monomials with both ``y`` and an odd class are
absent).

The ``"paper"`` convention drops the ``(-1)^n`` from both squares; the
class map ``y -> 2^(n-1) e`` is well defined under either convention, but
only ``"consistent"`` agrees with the torus restriction for odd ``n``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .expr import ParseError, parse_expression
from .polyarith import MultiPoly, format_terms
from .repweights import total_chern, weights_dplus_extreme
from .weylflag import decompose_invariant, euler_monomial, squared_elementary

CONVENTIONS = ("consistent", "paper")


@dataclass(frozen=True)
class PresentedRing:
    n: int
    convention: str = "consistent"
    kind: str = field(default="chow", compare=True)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank parameter n must be at least 2")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.kind not in ("chow", "cohomology"):
            raise ValueError(f"unknown ring kind {self.kind!r}")

    # -- generator bookkeeping -------------------------------------------

    @property
    def special(self) -> str:
        return "y" if self.kind == "chow" else "e"

    @property
    def width(self) -> int:
        return 2 * self.n

    @property
    def names(self) -> list[str]:
        return [f"c{i}" for i in range(2, 2 * self.n + 1)] + [self.special]

    @property
    def degrees(self) -> list[int]:
        return list(range(2, 2 * self.n + 1)) + [self.n]

    @property
    def odd_slots(self) -> tuple[int, ...]:
        return tuple(k for k in range(2 * self.n - 1) if (k + 2) % 2)

    @property
    def top_slot(self) -> int:
        return 2 * self.n - 2  # c_2n

    @property
    def square_coefficient(self) -> int:
        """``K`` in ``special^2 = K * c_2n``."""
        sign = (-1) ** self.n if self.convention == "consistent" else 1
        if self.kind == "chow":
            return sign * 2 ** (2 * self.n - 2)
        return sign

    @property
    def kills_special_odd(self) -> bool:
        return self.kind == "chow"

    def has_odd(self, m) -> bool:
        return any(m[k] for k in self.odd_slots)

    def degree(self, m) -> int:
        return sum(d * e for d, e in zip(self.degrees, m))

    # -- construction ----------------------------------------------------

    def element(self, body) -> PresentedElement:
        return _ELEMENT_CLASS[self.kind](self, body)

    def zero(self) -> PresentedElement:
        return self.element({})

    def constant(self, c: int) -> PresentedElement:
        return self.element({(0,) * self.width: c} if c else {})

    def one(self) -> PresentedElement:
        return self.constant(1)

    def gen(self, name: str) -> PresentedElement:
        names = self.names
        if name not in names:
            raise KeyError(f"{name!r} is not a generator of {self}")
        m = [0] * self.width
        m[names.index(name)] = 1
        return self.normalize({tuple(m): 1})

    def parse(self, text: str) -> PresentedElement:
        index = {name: i for i, name in enumerate(self.names)}

        def variable(name, pos):
            if name not in index:
                raise ParseError(f"unknown generator {name!r}", pos)
            m = [0] * self.width
            m[index[name]] = 1
            return self.normalize({tuple(m): 1})

        return parse_expression(text, self.constant, variable)

    # -- rewriting -------------------------------------------------------

    def _lower_square(self, m, c):
        m = list(m)
        k, s = divmod(m[-1], 2)
        m[-1] = s
        m[self.top_slot] += k
        return tuple(m), c * self.square_coefficient**k

    def normalize(self, raw, rng=None) -> PresentedElement:
        """Reduce a formal combination of generator monomials to canonical form.

        ``raw`` is a mapping or an iterable of ``(monomial, coefficient)``
        pairs, duplicates allowed. With ``rng`` the rewrite rules fire one at
        a time in random order; the result must not depend on the order.
        """
        items = list(raw.items()) if hasattr(raw, "items") else list(raw)
        for m, _ in items:
            if len(m) != self.width:
                raise ValueError(f"monomial {m} does not have {self.width} slots")
        if rng is not None:
            return self._normalize_random(items, rng)
        body: dict = {}
        for m, c in items:
            if m[-1] >= 2:
                m, c = self._lower_square(m, c)
            if self.kills_special_odd and m[-1] and self.has_odd(m):
                continue
            body[m] = body.get(m, 0) + c
        out = {}
        for m, c in body.items():
            if self.has_odd(m):
                c %= 2
            if c:
                out[m] = c
        return self.element(out)

    def _normalize_random(self, items, rng) -> PresentedElement:
        terms = [(tuple(m), c) for m, c in items]
        top, K = self.top_slot, self.square_coefficient
        while True:
            moves = []
            seen: dict = {}
            for i, (m, c) in enumerate(terms):
                if c == 0:
                    moves.append(("drop", i))
                if m[-1] >= 2:
                    moves.append(("square", i))
                if self.has_odd(m):
                    if self.kills_special_odd and m[-1]:
                        moves.append(("kill", i))
                    if c % 2 != c:
                        moves.append(("mod2", i))
                if m in seen:
                    moves.append(("merge", seen[m], i))
                else:
                    seen[m] = i
            if not moves:
                break
            move = rng.choice(moves)
            kind, i = move[0], move[1]
            m, c = terms[i]
            if kind == "drop" or kind == "kill":
                del terms[i]
            elif kind == "square":
                # one step: special^2 -> K c_2n
                mm = list(m)
                mm[-1] -= 2
                mm[top] += 1
                terms[i] = (tuple(mm), c * K)
            elif kind == "mod2":
                terms[i] = (m, c % 2)
            else:
                j = move[2]
                terms[i] = (m, c + terms[j][1])
                del terms[j]
        return self.element(dict(terms))

    def basis(self, degree: int) -> list[tuple[int, ...]]:
        """Canonical monomials of the given weighted degree, in print order."""
        out = []
        degs = self.degrees[:-1]

        def rec(k, left, acc):
            if k == len(degs):
                if left == 0:
                    out.append(tuple(acc))
                return
            for e in range(left // degs[k] + 1):
                acc.append(e)
                rec(k + 1, left - e * degs[k], acc)
                acc.pop()

        for s in (0, 1):
            if degree - s * self.n < 0:
                continue
            start = len(out)
            rec(0, degree - s * self.n, [])
            out[start:] = [m + (s,) for m in out[start:]]
        if self.kills_special_odd:
            out = [m for m in out if not (m[-1] and self.has_odd(m))]
        return sorted(out, key=self._sort_key)

    def _sort_key(self, m):
        return (self.degree(m), tuple(-e for e in m))

    def __str__(self):
        label = "CH*" if self.kind == "chow" else "H*"
        return f"{label}BSO({2 * self.n}) [{self.convention}]"


class PresentedElement:
    __slots__ = ("ring", "body")

    def __init__(self, ring: PresentedRing, body: dict):
        self.ring = ring
        self.body = {m: c for m, c in body.items() if c}

    def _coerce(self, other):
        if isinstance(other, PresentedElement):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, PresentedElement):
            return NotImplemented
        return self.ring == other.ring and self.body == other.body

    def __hash__(self):
        return hash((self.ring, frozenset(self.body.items())))

    def __bool__(self):
        return bool(self.body)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.normalize(list(self.body.items()) + list(other.body.items()))

    __radd__ = __add__

    def __neg__(self):
        return self.ring.normalize([(m, -c) for m, c in self.body.items()])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        raw = []
        for m1, c1 in self.body.items():
            for m2, c2 in other.body.items():
                raw.append((tuple(a + b for a, b in zip(m1, m2)), c1 * c2))
        return self.ring.normalize(raw)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def coefficient(self, m) -> int:
        return self.body.get(tuple(m), 0)

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.body.items(), key=lambda mc: self.ring._sort_key(mc[0]))

    def homogeneous_part(self, d: int):
        return self.ring.element({m: c for m, c in self.body.items() if self.ring.degree(m) == d})

    def __str__(self):
        return format_terms(self.terms(), self.ring.names)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r}, n={self.ring.n})"


class ChowElement(PresentedElement):
    __slots__ = ()


class CohElement(PresentedElement):
    __slots__ = ()


_ELEMENT_CLASS = {"chow": ChowElement, "cohomology": CohElement}


@lru_cache(maxsize=None)
def chow_ring(n: int, convention: str = "consistent") -> PresentedRing:
    return PresentedRing(n, convention, "chow")


@lru_cache(maxsize=None)
def cohomology_ring(n: int, convention: str = "consistent") -> PresentedRing:
    return PresentedRing(n, convention, "cohomology")


def chow_normalize(raw, n: int, convention: str = "consistent", rng=None) -> ChowElement:
    return chow_ring(n, convention).normalize(raw, rng)


def coh_normalize(raw, n: int, convention: str = "consistent", rng=None) -> CohElement:
    return cohomology_ring(n, convention).normalize(raw, rng)


def _same_ring(a, b, kind):
    if a.ring != b.ring or a.ring.kind != kind:
        raise ValueError(f"expected two {kind} elements over the same ring")


def chow_mul(a: ChowElement, b: ChowElement) -> ChowElement:
    _same_ring(a, b, "chow")
    return a * b


def coh_mul(a: CohElement, b: CohElement) -> CohElement:
    _same_ring(a, b, "cohomology")
    return a * b


def class_map(x: ChowElement) -> CohElement:
    """``c_i -> c_i``, ``y -> 2^(n-1) e``."""
    if x.ring.kind != "chow":
        raise ValueError("class_map takes a Chow ring element")
    return class_map_raw(x.body.items(), x.ring.n, x.ring.convention)


def class_map_raw(raw, n: int, convention: str = "consistent") -> CohElement:
    """Apply the generator assignment to an unreduced combination of Chow monomials.

    Lets the defining relations themselves be pushed through the map.
    """
    target = cohomology_ring(n, convention)
    scale = 2 ** (n - 1)
    return target.normalize([(tuple(m), c * scale ** m[-1]) for m, c in raw])


def torus_generator_images(n: int) -> list[MultiPoly]:
    """Images of ``c_2..c_2n, e`` in the polynomial ring of the maximal torus."""
    ps = squared_elementary(n)
    images = []
    for i in range(2, 2 * n + 1):
        if i % 2:
            images.append(MultiPoly.zero(n))
        else:
            j = i // 2
            images.append(ps[j - 1] * (-1) ** j)
    images.append(euler_monomial(n))
    return images


def torus_restriction(x: CohElement) -> MultiPoly:
    """Restrict to the maximal torus: ``c_2j -> (-1)^j e_j(z^2)``, ``c_odd -> 0``, ``e -> z_1...z_n``.

    Two-torsion classes restrict to zero, so this is only injective on the
    part free of odd Chern classes.
    """
    ring = x.ring
    if ring.kind != "cohomology":
        raise ValueError("torus_restriction takes a cohomology element")
    carrier = MultiPoly(x.body, ring.width)
    return carrier.compose(torus_generator_images(ring.n))


def express_in_generators(f: MultiPoly, n: int, convention: str = "consistent") -> CohElement:
    """Rewrite a W(D_n)-invariant torus polynomial in ``c_2, c_4, ..., c_2n, e``."""
    a, b = decompose_invariant(f, n)
    ring = cohomology_ring(n, convention)
    raw = []
    for part, s in ((a, 0), (b, 1)):
        for k, c in part.terms.items():
            m = [0] * ring.width
            sign = 1
            for j, kj in enumerate(k, start=1):
                m[2 * j - 2] = kj
                if j % 2 and kj % 2:
                    sign = -sign
            m[-1] = s
            raw.append((tuple(m), sign * c))
    x = ring.normalize(raw)
    if torus_restriction(x) != f:
        raise ArithmeticError("generator expression does not restrict back to the input")
    return x


@dataclass(frozen=True)
class Theorem3Report:
    n: int
    d: int
    p: CohElement
    element: CohElement

    @property
    def closed_form(self) -> int:
        return 2 ** (self.n - 1) * math.factorial(self.n - 1)


def theorem3_report(n: int, convention: str = "consistent") -> Theorem3Report:
    """Split ``c_n`` of the self-dual forms as ``d_n e + p`` with ``p`` free of ``e``."""
    if not 2 <= n <= 5:
        raise ValueError(f"n={n} outside 2..5")
    top = total_chern(weights_dplus_extreme(n), max_degree=n).homogeneous_part(n)
    x = express_in_generators(top, n, convention)
    ring = x.ring
    e_key = (0,) * (ring.width - 1) + (1,)
    d = x.coefficient(e_key)
    p = x - ring.gen("e") * d
    if any(m[-1] for m in p.body):
        raise ArithmeticError("degree-n part has e-terms beyond d_n e")
    return Theorem3Report(n, d, p, x)


def basis_element(ring: PresentedRing, m) -> PresentedElement:
    return ring.element({tuple(m): 1})


def monomials_through(ring: PresentedRing, max_degree: int):
    return list(itertools.chain.from_iterable(ring.basis(d) for d in range(max_degree + 1)))
