import json
import shutil

import pytest

from dahajones import fixtures as F
from dahajones.symalg import parse_poly

NAMES = ["JD_A1_3_2_m2", "JD_A1_4_3_m2", "JD_CC1_3_2_m2",
         "H32_w1_w2", "H32_3w1", "H32_2w2", "H32_w4"]


def test_all_tables_present(fx):
    assert sorted(fx) == sorted(NAMES)


@pytest.mark.parametrize("name", NAMES)
def test_sources_reparse_to_stored_terms(fx, name):
    source, env = F.fixture_sources()[name]
    assert parse_poly(source, env) == fx[name]


def _copy(tmp_path):
    dst = tmp_path / "tables.json"
    shutil.copy(F.fixture_path(), dst)
    return dst


def test_env_override(tmp_path, monkeypatch):
    dst = _copy(tmp_path)
    monkeypatch.setenv(F.ENV_VAR, str(dst))
    assert F.fixture_path() == dst
    assert sorted(F.load_fixtures()) == sorted(NAMES)


def test_tampered_table_is_refused(tmp_path):
    dst = _copy(tmp_path)
    doc = json.loads(dst.read_text())
    terms = doc["polynomials"]["H32_w4"]["terms"]
    terms[0]["coeff"]["re"] = "2"
    dst.write_text(json.dumps(doc))
    with pytest.raises(F.FixtureError):
        F.load_fixtures(dst)
    assert F.load_fixtures(dst, verify=False)["H32_w4"]


def test_unreadable_file(tmp_path):
    with pytest.raises(F.FixtureError):
        F.load_fixtures(tmp_path / "missing.json")
