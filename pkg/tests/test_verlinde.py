import json
from fractions import Fraction
from importlib import resources

import pytest

from dahajones import verlinde as V
from dahajones.cyclotomic import CycloField
from dahajones.polyrep import e_polynomial

SAMPLE = [V.VerlindeParams(5, 1, 0), V.VerlindeParams(4, Fraction(1, 2), Fraction(1, 2), 1, 0),
          V.VerlindeParams(6, Fraction(3, 2), 1, Fraction(1, 2), 1)]


def stored_tuples():
    path = resources.files("dahajones") / "fixtures" / "verlinde_tuples.json"
    return json.loads(path.read_text())


@pytest.mark.parametrize("k", range(1, 13))
def test_cyclotomic_zeta_order(k):
    F = CycloField(4 * k)
    z = F.zeta(1)
    assert z ** (4 * k) == F.one
    assert all(z ** j != F.one for j in range(1, 4 * k))


def test_cyclotomic_inverse():
    F = CycloField(20)
    x = F.zeta(3) + F.const(2)
    assert x * x.inverse() == F.one


@pytest.mark.parametrize("params", SAMPLE, ids=lambda p: p.label())
@pytest.mark.parametrize("n", [1, -1, 2])
def test_root_recurrence_matches_symbolic_specialization(params, n):
    """E_n computed at the root equals the generic E_n specialized afterwards."""
    ctx = params.context()
    generic = e_polynomial("CC1", n)
    lc = ctx.specialize(generic.lc)
    assert lc
    at_root = V.specialize_E_at_root(params, n)
    want = {k: ctx.specialize(c) / lc for k, c in generic.numer.items()}
    keys = set(want) | set(at_root.coeffs)
    assert all(want.get(k, ctx.zero) == at_root.coeffs.get(k, ctx.zero) for k in keys)


@pytest.mark.parametrize("params", SAMPLE, ids=lambda p: p.label())
def test_radical_generator(params):
    report = V.check_radical_generator(params)
    assert report.ok
    assert report.dimension == 2 * params.M


def test_boundary_limit_case():
    p = V.VerlindeParams(4, 1, 1)
    report = V.check_radical_generator(p)
    assert report.boundary_method == "limit"
    assert report.ok


@pytest.mark.parametrize("N, k1, k0", [(1, Fraction(1, 2), 0), (4, 2, 0), (4, 1, Fraction(3, 2)),
                                       (4, 0, 0)])
def test_inadmissible(N, k1, k0):
    with pytest.raises(V.InadmissibleParams):
        V.VerlindeParams(N, k1, k0).validate()


def test_not_half_integer():
    with pytest.raises(V.InadmissibleParams):
        V.VerlindeParams(4, Fraction(1, 3), 0)


def test_search_matches_stored_tuples():
    doc = stored_tuples()
    found = V.search_tuples(doc["max_N"], [Fraction(x) for x in doc["l_grid"]])
    stored = [(d["N"], Fraction(d["k1"]), Fraction(d["k0"]), Fraction(d["l1"]), Fraction(d["l0"]))
              for d in doc["tuples"]]
    assert [(p.N, p.k1, p.k0, p.l1, p.l0) for p in found] == stored


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_stored_tuples_small_N(N):
    for d in stored_tuples()["tuples"]:
        if d["N"] != N:
            continue
        p = V.VerlindeParams(d["N"], Fraction(d["k1"]), Fraction(d["k0"]),
                             Fraction(d["l1"]), Fraction(d["l0"]))
        report = V.check_radical_generator(p)
        assert report.ok == d["ok"] is True
        assert report.boundary_method == d["boundary"]
