import sympy
from hypothesis import strategies as st

from chowbso.polyarith import MultiPoly


def poly_strategy(nvars, max_exp=3, max_terms=5, coeffs=st.integers(-20, 20)):
    mono = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.dictionaries(mono, coeffs, max_size=max_terms).map(lambda d: MultiPoly(d, nvars))


def multilinear_strategy(nvars, max_terms=6):
    return poly_strategy(nvars, max_exp=1, max_terms=max_terms)


def to_sympy(p: MultiPoly):
    zs = sympy.symbols(f"z1:{p.nvars + 1}")
    return sympy.Add(*[c * sympy.Mul(*[z**e for z, e in zip(zs, m)]) for m, c in p.terms.items()])


def from_sympy(expr, nvars):
    zs = sympy.symbols(f"z1:{nvars + 1}")
    poly = sympy.Poly(sympy.expand(expr), *zs)
    return MultiPoly({tuple(m): int(c) for m, c in poly.terms()}, nvars)


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k[2:])):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
