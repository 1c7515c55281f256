from fractions import Fraction

import pytest
from hypothesis import strategies as st

from sp2branch.fock import FockPolynomial
from sp2branch.radical import RadicalScalar

RADICANDS = (1, 2, 3, 5, 6, 7, 10)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def radicals(draw, max_terms=3):
    keys = draw(st.lists(st.sampled_from(RADICANDS), max_size=max_terms, unique=True))
    return RadicalScalar({d: draw(fractions) for d in keys})


@st.composite
def polynomials(draw, max_deg=4, max_terms=4):
    exps = draw(
        st.lists(
            st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)),
            max_size=max_terms,
            unique=True,
        )
    )
    return FockPolynomial(2, {a: draw(radicals(2)) for a in exps})


@pytest.fixture
def half():
    return Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[tag])
