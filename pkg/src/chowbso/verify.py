"""Per-rank verification checks behind ``chowbso verify``.

Every check is exact and seeded, so reports are byte-stable. A check
applies to a rank ``n`` only inside its ``(lo, hi)`` window; ``verify``
accepts ``2 <= n <= MAX_VERIFY_N`` and runs whatever applies.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from . import repweights as rw
from . import ringpres as rp
from . import weylflag as wf
from .sampling import random_element, random_invariant, random_raw

MAX_VERIFY_N = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    witness: str

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"


@dataclass
class VerifyReport:
    n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if all(c.ok for c in self.checks) else 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "checks": [{"name": c.name, "status": c.status, "witness": c.witness} for c in self.checks],
        }


def check_d_table(n, convention):
    prod = rw.euler_coefficient_product(n)
    kutin = rw.euler_coefficient_kutin(n)
    closed = rw.euler_coefficient_closed(n)
    order = wf.weyl_order(n)
    ok = prod == kutin and abs(prod) == closed and abs(prod) * n == order
    return ok, f"product={prod} kutin={kutin} closed={closed} |W|={order}"


def check_edidin_graham(n, convention):
    source = wf.eg_class_input(n)
    got = wf.pushforward_flag(source, n).value
    want = wf.euler_monomial(n) * 2 ** (n - 1)
    return got == want, f"p_*({source}) = {got}"


def check_projection(n, convention, samples=20):
    rng = random.Random(f"projection-{n}")
    s = wf.flag_class_s(n)
    scale = 2 ** (n - 1)
    for k in range(samples):
        g = random_invariant(n, rng)
        got = wf.pushforward_flag(s * g, n).value
        if got != g * scale:
            return False, f"sample {k}: g = {g}, p_*(s*g) = {got}"
    return True, f"{samples} random invariants of degree <= 6"


def relation_raws(ring: rp.PresentedRing):
    """The defining relations as unreduced Chow combinations."""
    n, w = ring.n, ring.width
    rels = []
    for k in ring.odd_slots:
        m = [0] * w
        m[k] = 1
        rels.append((f"2*c{k + 2}", [(tuple(m), 2)]))
        m2 = list(m)
        m2[-1] = 1
        rels.append((f"y*c{k + 2}", [(tuple(m2), 1)]))
    y2 = (0,) * (w - 1) + (2,)
    top = [0] * w
    top[ring.top_slot] = 1
    rels.append(("y^2 - K*c" + str(2 * n), [(y2, 1), (tuple(top), -ring.square_coefficient)]))
    return rels


def check_relations(n, convention):
    ring = rp.chow_ring(n, convention)
    bad = [name for name, raw in relation_raws(ring) if rp.class_map_raw(raw, n, convention)]
    return not bad, f"{len(relation_raws(ring))} relation images vanish" if not bad else f"nonzero: {bad}"


def check_multiplicative(n, convention, pairs=100):
    rng = random.Random(f"classmap-{n}")
    ring = rp.chow_ring(n, convention)
    for k in range(pairs):
        a, b = random_element(ring, rng), random_element(ring, rng)
        if rp.class_map(a * b) != rp.class_map(a) * rp.class_map(b):
            return False, f"pair {k}: a = {a}, b = {b}"
    return True, f"{pairs} random pairs"


def check_confluence(n, convention, trials=500):
    rng = random.Random(f"confluence-{n}")
    for k in range(trials):
        ring = rp.chow_ring(n, convention) if k % 2 == 0 else rp.cohomology_ring(n, convention)
        raw = random_raw(ring, rng)
        canon = ring.normalize(raw)
        shuffled = ring.normalize(raw, rng=rng)
        if shuffled != canon or ring.normalize(canon.body) != canon:
            return False, f"trial {k} ({ring.kind}): {canon} vs {shuffled}"
    return True, f"{trials} randomized rewrite orders"


def check_top_chern_split(n, convention):
    rep = rp.theorem3_report(n, convention)
    ring = rep.element.ring
    top = rw.total_chern(rw.weights_dplus_extreme(n), max_degree=n).homogeneous_part(n)
    restored = rp.torus_restriction(ring.gen("e") * rep.d + rep.p)
    ok = restored == top and abs(rep.d) == rep.closed_form
    if n == 2:
        ok = ok and rep.d == -2 and rep.p == ring.gen("c2")
    return ok, f"c_{n}(D+) = {rep.d}*e + ({rep.p})"


def check_odd_chern(n, convention):
    c = rw.total_chern(rw.weights_standard(n))
    odd = [m for m in c.terms if sum(m) % 2]
    return not odd, f"{len(c.terms)} terms, {len(odd)} of odd degree"


def check_kutin_audit(n, convention):
    counts = [rw.kutin_pairing_audit(n, i) for i in range(1, n)]
    return counts == list(range(1, n)), f"unpaired counts {counts}"


def check_even_sign_symmetry(n, convention, samples=50):
    rng = random.Random(f"evensign-{n}")
    f = rw.total_chern(rw.weights_dplus_extreme(n))
    vectors = [v for v in itertools.product((1, -1), repeat=n) if math.prod(v) == 1]
    for _ in range(samples):
        a = rng.choice(vectors)
        if rw.even_sign_substitution(f, a) != f:
            return False, f"substitution {a} changes the product"
    return True, f"{samples} even sign substitutions fix {len(f.terms)} terms"


def check_y_not_twice(n, convention):
    ring = rp.chow_ring(n, convention)
    basis = ring.basis(n)
    y_key = (0,) * (ring.width - 1) + (1,)
    y = rp.basis_element(ring, y_key)
    # x -> 2x is diagonal on the basis; only the y-coordinate can hit y
    ycoefs = [(rp.basis_element(ring, m) * 2).coefficient(y_key) for m in basis]
    g = math.gcd(*ycoefs)
    box = range(-3, 4)
    hits = [
        ks
        for ks in itertools.product(box, repeat=len(basis))
        if ring.element({m: k for m, k in zip(basis, ks)}) * 2 == y
    ]
    ok = g != 1 and not hits
    return ok, f"{len(basis)} basis monomials, gcd of y-coefficients of 2*b = {g}, box hits {len(hits)}"


@dataclass(frozen=True)
class Check:
    name: str
    lo: int
    hi: int
    run: Callable


CHECKS = [
    Check("d_n_table", 2, 10, check_d_table),
    Check("edidin_graham_identity", 2, 6, check_edidin_graham),
    Check("projection_formula", 2, 5, check_projection),
    Check("relation_images_vanish", 2, 6, check_relations),
    Check("class_map_multiplicative", 2, 6, check_multiplicative),
    Check("normal_form_confluence", 2, 6, check_confluence),
    Check("top_chern_split_small_rank", 2, 4, check_top_chern_split),
    Check("odd_chern_vanishing", 2, 8, check_odd_chern),
    Check("kutin_pairing_audit", 2, 8, check_kutin_audit),
    Check("even_sign_symmetry", 2, 6, check_even_sign_symmetry),
    Check("y_not_twice_anything", 2, 5, check_y_not_twice),
]


def checks_for(n: int) -> list[Check]:
    return [c for c in CHECKS if c.lo <= n <= c.hi]


def verify(n: int, convention: str = "consistent") -> VerifyReport:
    if not 2 <= n <= MAX_VERIFY_N:
        raise ValueError(f"n={n} outside 2..{MAX_VERIFY_N}")
    report = VerifyReport(n)
    for check in checks_for(n):
        try:
            ok, witness = check.run(n, convention)
        except Exception as exc:  # a crashing check is a failing check
            ok, witness = False, f"{type(exc).__name__}: {exc}"
        report.checks.append(CheckResult(check.name, ok, witness))
    return report
