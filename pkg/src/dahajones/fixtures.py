"""Loader for the transcribed polynomial tables."""
from __future__ import annotations

import hashlib
import json
import os
from importlib import resources
from pathlib import Path

from .symalg import LaurentPoly, SymalgError

ENV_VAR = "DAHA_FIXTURES"


class FixtureError(SymalgError):
    pass


def fixture_path() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("dahajones") / "fixtures" / "paper_polynomials.json"))


def _checksum(terms: dict) -> str:
    blob = json.dumps(terms, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def load_fixtures(path: str | Path | None = None, verify: bool = True) -> dict:
    """Name -> LaurentPoly.  The recorded checksum is checked unless verify=False."""
    path = Path(path) if path is not None else fixture_path()
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError) as e:
        raise FixtureError(f"cannot read fixtures from {path}: {e}") from None
    entries = doc.get("polynomials", {})
    terms = {k: v["terms"] for k, v in entries.items()}
    if verify and doc.get("checksum") != _checksum(terms):
        raise FixtureError(f"checksum mismatch in {path}")
    return {k: LaurentPoly.from_json_obj(v) for k, v in terms.items()}


def fixture_sources(path: str | Path | None = None) -> dict:
    path = Path(path) if path is not None else fixture_path()
    doc = json.loads(path.read_text())
    return {k: (v["source"], v.get("env", {})) for k, v in doc["polynomials"].items()}
