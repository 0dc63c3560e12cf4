from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from dahajones import checks as C
from dahajones import knots as K
from dahajones.symalg import LaurentPoly


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_a1_lift_has_the_right_column(r, s):
    assume(gcd(r, s) == 1)
    lift = K.lift_word("A1", r, s)
    assert (lift.matrix[0][0], lift.matrix[1][0]) == (r, s)
    assert lift.det == 1


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_cc1_lift_is_in_gamma0_2(r, s):
    assume(gcd(r, s) == 1 and r % 2)
    lift = K.lift_word("CC1", r, s)
    (a, b), (c, _) = lift.matrix
    assert (a, c) == (r, s)
    assert b % 2 == 0
    assert lift.det == 1


@pytest.mark.parametrize("r, s", [(2, 4), (0, 0), (6, 9)])
def test_not_coprime(r, s):
    with pytest.raises(K.NotCoprime):
        K.lift_word("A1", r, s)


def test_even_first_entry():
    with pytest.raises(K.EvenFirstEntry):
        K.lift_word("CC1", 2, 3)


def test_cc1_orientation():
    assert K.cc1_orientation(2, 3) == (3, 2, True)
    assert K.cc1_orientation(3, 4) == (3, 4, False)


def test_negative_color():
    with pytest.raises(ValueError):
        K.jd_a1(3, 2, -1)


# --------------------------------------------------------------------------
# tables

def test_a1_tables(fx):
    assert K.jd_a1(3, 2, 2) == fx["JD_A1_3_2_m2"]
    assert K.jd_a1(4, 3, 2) == fx["JD_A1_4_3_m2"]


def test_cc1_table(fx):
    assert K.jd_cc1(3, 2, 2) == fx["JD_CC1_3_2_m2"]


def test_cc1_table_cross_pair(fx):
    assert C.q2_reduction(fx["JD_CC1_3_2_m2"]) == fx["JD_A1_4_3_m2"]


@pytest.mark.parametrize("r", [3, 5, 7])
@pytest.mark.parametrize("m", [1, 2])
def test_tilde_unknot(r, m):
    assert K.jd_a1(r, 1, m, tilde=True) == LaurentPoly.const(1)


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_unit_knot_formula(s, m):
    assert K.jd_cc1(1, s, m) == K.jd_cc1_unit_formula(s, m)


@pytest.mark.parametrize("r, s, m", [(3, 2, 1), (3, 2, 2), (5, 2, 1), (3, 1, 1), (1, 2, 1)])
def test_closed_form_specialization(r, s, m):
    assert K.jd_cc1(r, s, m, K.params_prop23()) == K.prop23_formula(r, s, m)


# --------------------------------------------------------------------------
# reductions

@pytest.mark.parametrize("r, s, m", C.REDUCTION_CASES)
def test_a1_reduction(r, s, m):
    j = K.jd_cc1(r, s, m)
    assert C.a1_reduction(j) == K.jd_a1(r, s, m)
    assert K.jd_cc1(r, s, m, K.params_a1_reduction()) == K.jd_a1(r, s, m)


@pytest.mark.parametrize("r, s, m", C.REDUCTION_CASES)
def test_q2_reduction(r, s, m):
    j = K.jd_cc1(r, s, m)
    assert C.q2_reduction(j) == K.jd_a1(r, 2 * s, m)
    assert K.jd_cc1(r, s, m, K.params_q2_reduction()) == K.jd_a1(r, 2 * s, m)


@pytest.mark.parametrize("r, s, m", C.REDUCTION_CASES)
def test_leading_monomial_uses_doubled_s(r, s, m):
    assert C.leading_term_ok(r, s, m)


# --------------------------------------------------------------------------
# symmetries on small knots (the full set runs in the acceptance suite)

KNOTS = [(3, 2), (2, 3), (3, -2)]


@pytest.mark.parametrize("kind", ["A1", "CC1"])
@pytest.mark.parametrize("r, s", KNOTS)
@pytest.mark.parametrize("m", [1, 2])
def test_mirror(kind, r, s, m):
    assert C.mirror_ok(kind, r, s, m)


@pytest.mark.parametrize("kind", ["A1", "CC1"])
@pytest.mark.parametrize("r, s", [(3, 2), (2, 3), (3, 4)])
def test_transposition(kind, r, s):
    assert C.transposition_ok(kind, r, s, 1)


@pytest.mark.parametrize("kind", ["A1", "CC1"])
@pytest.mark.parametrize("r, s", KNOTS)
def test_lift_independence(kind, r, s):
    assert C.lift_independence_ok(kind, r, s, 1, extra=2)


@pytest.mark.parametrize("kind", ["A1", "CC1"])
@pytest.mark.parametrize("r, s", KNOTS)
def test_q_one_multiplicative(kind, r, s):
    assert C.q_one_multiplicative_ok(kind, r, s, 2)


@pytest.mark.parametrize("m, n", [(1, 0), (2, 0), (2, 1)])
def test_color_exchange(m, n):
    assert C.color_exchange_ok(3, 2, m, n)


@pytest.mark.parametrize("r, s", KNOTS)
@pytest.mark.parametrize("m", [1, 2])
def test_parity(r, s, m):
    assert C.parity_ok(r, s, m)


def test_parity_check_detects_mixed_terms():
    # a stray half-integral u0 exponent next to integral ones breaks the split
    j = K.jd_cc1(3, 2, 1)
    K._JD_CACHE[("CC1", None, K.lift_word("CC1", 3, 2).word.letters, 1)] = \
        j + LaurentPoly.monomial({"u0": "1/2"})
    try:
        assert not C.parity_ok(3, 2, 1)
    finally:
        K._JD_CACHE[("CC1", None, K.lift_word("CC1", 3, 2).word.letters, 1)] = j


@pytest.mark.parametrize("r, s", [(3, 2), (5, 2), (3, 4)])
@pytest.mark.parametrize("m", [1, 2])
def test_a1_tilde_prefactor(r, s, m):
    assert C.tilde_a1_ok(r, s, m)
