import pytest

from dahajones import superpoly as S
from dahajones.knots import jd_a1
from dahajones.symalg import LaurentPoly, var

ONE = LaurentPoly.const(1)
q, t, a = var("q"), var("t"), var("a")


@pytest.fixture(scope="module")
def bridge():
    cache = {}

    def get(p, m):
        if (p, m) not in cache:
            cache[p, m] = S.super_via_daha(p, m)
        return cache[p, m]
    return get


@pytest.mark.parametrize("m", [1, 2, 3])
def test_bridge_matches_trefoil_sum(bridge, m):
    assert bridge(1, m).body == S.super_trefoil(m).body


def test_trefoil_m1():
    assert S.super_trefoil(1).body == ONE + q * a + q * t


def test_bridge_matches_table(bridge, fx):
    assert bridge(1, 3).body == fx["H32_3w1"]


@pytest.mark.parametrize("p", [1, 2])
@pytest.mark.parametrize("m", [1, 2])
class TestSpecializations:
    def test_at_minus_t(self, bridge, p, m):
        assert bridge(p, m).at(-t) == ONE

    def test_at_minus_t_squared(self, bridge, p, m):
        assert bridge(p, m).at(-t ** 2) == jd_a1(2 * p + 1, 2, m, tilde=True)

    def test_at_minus_q_to_minus_m(self, bridge, p, m):
        assert bridge(p, m).at(-var("q", -m)) == var("q", p * m * m) * var("t", m * p)

    def test_q_equals_one(self, bridge, p, m):
        assert S.at_q_one(bridge(p, m).body) == S.q_one_formula(p, m)


def test_invariants_flag_a_sign_flip(bridge):
    bad = S.SuperPoly(1, 1, -bridge(1, 1).body)
    with pytest.raises(S.InvariantViolation):
        bad.certify()


@pytest.mark.parametrize("p, m", [(0, 1), (1, 0)])
def test_bridge_rejects_degenerate_input(p, m):
    with pytest.raises(ValueError):
        S.super_via_daha(p, m)


@pytest.mark.parametrize("m, n", [(1, 0), (2, 0), (2, 1)])
def test_bridge_color_exchange(m, n):
    lhs, rhs = S.bridge_color_exchange(1, m, n)
    assert lhs == rhs


def test_gauss_binomial():
    assert S.gauss_binomial(3, 1) == ONE + q + q * q
    assert S.gauss_binomial(4, 2) == S.gauss_binomial(4, 2).divide_exact(ONE) == \
        ONE + q + 2 * q ** 2 + q ** 3 + q ** 4


# --------------------------------------------------------------------------
# the A-coefficients

@pytest.mark.parametrize("m", [1, 2, 3])
def test_a_coefficients_trivial_for_trefoil(bridge, m):
    assert S.extract_A_coefficients(bridge(1, m)) == [ONE] * (m + 1)


@pytest.mark.parametrize("p, m", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_a_coefficients_are_a_free(bridge, p, m):
    coeffs = S.extract_A_coefficients(bridge(p, m))
    assert all("a" not in c.variables() for c in coeffs)
    assert coeffs[0] == ONE


@pytest.mark.parametrize("m", [1, 2])
def test_xi_shift(bridge, m):
    lo = S.extract_A_coefficients(bridge(2, m))
    hi = S.extract_A_coefficients(bridge(2, m + 1))
    for n in range(m + 1):
        assert hi[n] == S.xi(lo[n])


@pytest.mark.parametrize("p, m", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_subsum(bridge, p, m):
    coeffs = S.extract_A_coefficients(bridge(p, m))
    for n, c in enumerate(coeffs):
        assert S.subsum_violations(c, m, n, degree=6) == []


def test_extraction_rejects_non_expansion():
    with pytest.raises(S.ExpansionFails):
        S.extract_A_coefficients(S.SuperPoly(1, 2, ONE + a * q))


def test_xi():
    assert S.xi(q * t) == var("q", 3) * t


# --------------------------------------------------------------------------
# table identities

def test_fixture_identities(fx):
    checks = S.verify_fixture_identities(fx)
    assert [c.name for c in checks if not c.ok] == []
    assert len(checks) == 8


def test_fixture_identity_detects_tampering(fx):
    broken = dict(fx, H32_w4=fx["H32_w4"] + q)
    names = [c.name for c in S.verify_fixture_identities(broken, with_daha=False) if not c.ok]
    assert names == ["color exchange q = t^-2: t^8 H(2w2) = H(w4)"]
