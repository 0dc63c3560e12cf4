import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from dahajones.symalg import LaurentPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SMALL_VARS = ("q", "t", "u0", "v1")


@st.composite
def laurent_polys(draw, vars=SMALL_VARS, max_terms=4, max_exp=3, halves=True):
    """Sparse Laurent polynomials with small integer coefficients."""
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = {}
        for v in vars:
            e = draw(st.integers(-max_exp, max_exp))
            if halves and v != "q" and draw(st.booleans()):
                e = Fraction(2 * e + 1, 2)
            if e:
                exps[v] = e
        c = draw(st.integers(-3, 3).filter(bool))
        terms = (LaurentPoly(terms) + LaurentPoly.monomial(exps, c)).terms
    return LaurentPoly(terms)


@pytest.fixture(scope="session")
def fx():
    from dahajones.fixtures import load_fixtures
    return load_fixtures()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = mod.summary_lines() if mod else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
