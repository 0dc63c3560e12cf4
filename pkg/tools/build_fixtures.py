"""Regenerate fixtures/paper_polynomials.json from the transcribed sources.

Each entry keeps the hand-transcribed expression next to its canonical
terms.  The checksum covers the canonical terms only.
"""
import hashlib
import json
import sys
from pathlib import Path

from dahajones.symalg import parse_poly

OUT = Path(__file__).resolve().parents[1] / "src/dahajones/fixtures/paper_polynomials.json"

# q-check is read as q^{-1/2}; see the decisions ledger
CC1_ENV = {"Q": "q^(-1/2)", "A": "1 - v0", "B": "1 - u0", "R": "(Q*u0*u1*v0*v1)^(1/2)"}

SOURCES = {
    "H32_w1_w2": (
        "1 + a^3*q^6*t^-1 + 2*q*t - q*t^2 + 2*q^2*t^2 + q^3*t^2 - q^2*t^3 + 2*q^3*t^3"
        " - q^3*t^4 + 2*q^4*t^4 + q^5*t^5"
        " + a*(2*q^2 + q^3 + q*t^-1 - q^2*t + 3*q^3*t + q^4*t - q^3*t^2 + 3*q^4*t^2"
        " + q^5*t^2 - q^4*t^3 + 2*q^5*t^3 + q^6*t^4)"
        " + a^2*(q^4 + q^5 + q^3*t^-1 + q^4*t^-1 - q^4*t + q^5*t + q^6*t + q^6*t^2)"),
    "H32_3w1": (
        "1 + a^3*q^12 + q^3*t + q^4*t + q^5*t + q^6*t^2 + q^7*t^2 + q^8*t^2 + q^9*t^3"
        " + a*(q^3 + q^4 + q^5 + q^6*t + 2*q^7*t + 2*q^8*t + q^9*t + q^9*t^2 + q^10*t^2"
        " + q^11*t^2)"
        " + a^2*(q^7 + q^8 + q^9 + q^10*t + q^11*t + q^12*t)"),
    "H32_2w2": (
        "1 + a^4*q^10*t^-2 + q^2*t + q^3*t + q^2*t^2 + q^3*t^2 + q^4*t^2 + q^4*t^3"
        " + q^5*t^3 + q^4*t^4 + q^5*t^4 + q^6*t^4 + q^6*t^5 + q^7*t^5 + q^6*t^6 + q^7*t^6"
        " + q^8*t^8"
        " + a^3*(q^9 + q^10 + q^7*t^-2 + q^8*t^-2 + q^7*t^-1 + q^8*t^-1 + q^9*t + q^10*t)"
        " + a^2*(q^5 + q^6 + 2*q^7 + q^8 + q^5*t^-2 + q^4*t^-1 + 2*q^5*t^-1 + q^6*t^-1"
        " + q^6*t + 3*q^7*t + 2*q^8*t + q^7*t^2 + q^8*t^2 + q^9*t^2 + q^8*t^3"
        " + 2*q^9*t^3 + q^10*t^3 + q^9*t^4)"
        " + a*(q^2 + q^3 + q^4 + q^5 + q^2*t^-1 + q^3*t^-1 + 2*q^4*t + 3*q^5*t + q^6*t"
        " + q^4*t^2 + 2*q^5*t^2 + 2*q^6*t^2 + q^7*t^2 + 2*q^6*t^3 + 3*q^7*t^3 + q^8*t^3"
        " + q^6*t^4 + 2*q^7*t^4 + q^8*t^4 + q^8*t^5 + q^9*t^5 + q^8*t^6 + q^9*t^6)"),
    "H32_w4": (
        "1 + a^4*q^4*t^-6 + q*t + q*t^2 + q*t^3 + q*t^4 + q^2*t^4 + q^2*t^5 + 2*q^2*t^6"
        " + q^2*t^7 + q^2*t^8 + q^3*t^9 + q^3*t^10 + q^3*t^11 + q^3*t^12 + q^4*t^16"
        " + a^3*(q^4 + q^3*t^-6 + q^3*t^-5 + q^3*t^-4 + q^3*t^-3 + q^4*t^-2 + q^4*t^-1"
        " + q^4*t)"
        " + a^2*(3*q^3 + q^2*t^-5 + q^2*t^-4 + 2*q^2*t^-3 + q^2*t^-2 + q^3*t^-2"
        " + q^2*t^-1 + 2*q^3*t^-1 + 3*q^3*t + 2*q^3*t^2 + q^3*t^3 + q^4*t^3 + q^4*t^4"
        " + 2*q^4*t^5 + q^4*t^6 + q^4*t^7)"
        " + a*(q + 2*q^2 + q*t^-3 + q*t^-2 + q*t^-1 + q^2*t^-1 + 3*q^2*t + 3*q^2*t^2"
        " + 2*q^2*t^3 + q^3*t^3 + q^2*t^4 + 2*q^3*t^4 + 3*q^3*t^5 + 3*q^3*t^6"
        " + 2*q^3*t^7 + q^3*t^8 + q^4*t^9 + q^4*t^10 + q^4*t^11 + q^4*t^12)"),
    "JD_A1_3_2_m2": (
        "q^-6*t^-4*(1 - q^3*t^2 - q^2*t^2 + q^5*t^4 + q^3*t + q^2*t - q^4*t^3 - q^5*t^3"
        " + q^4*t^2)"),
    "JD_A1_4_3_m2": (
        "q^-12*t^-6*(1 + q^2*t + q^3*t + q^4*t + q^5*t - q^2*t^2 - q^3*t^2 + 2*q^6*t^2"
        " + q^7*t^2 + q^8*t^2 - q^4*t^3 - 2*q^5*t^3 - 2*q^6*t^3 - 2*q^7*t^3 + q^9*t^3"
        " + q^5*t^4 - 2*q^8*t^4 - 2*q^9*t^4 + q^7*t^5 + q^8*t^5 + q^9*t^5 - q^11*t^5"
        " + q^11*t^6)"),
    "JD_CC1_3_2_m2": (
        "Q*u0^-2*u1^-4*v0^-1*v1^-2*(A*B*Q^6*u1*R + B^2*Q^4*u1^2*v0*v1"
        " - A^2*Q^3*u0^2*u1^2*v1"
        " + A*R*(Q^7 + Q^8 + Q^5*u1 - Q^4*u0*u1 - 2*Q^5*u0*u1 - Q^2*u0*u1^2"
        " - 2*Q^3*u0*u1^2 - Q^4*u0*u1^2 + Q^2*u0^2*u1^2 + Q^3*u0^2*u1^2 + u0^2*u1^3"
        " + Q*u0^2*u1^3 - Q^4*R + Q^3*u1*v1 + Q^4*u1*v1 - Q*u0*u1^2*v1"
        " - Q^2*u0*u1^2*v1)"
        " + B*u1*v0*(Q^8 + Q^9 + Q^6*u1 - Q^6*u0*u1 - Q^4*u0*u1^2 + Q^6*v1 + Q^5*u1*v1"
        " + Q^2*u0*u1*v1 - Q^2*u0*u1^2*v1 - u0^2*u1^2*v1)"
        " + (Q^11*v0 - Q^5*u0*u1^2*v0 - Q^7*u0*u1^2*v0 - Q^3*u0*u1^3*v0"
        " + Q^3*u0^2*u1^3*v0 + Q*u0^2*u1^4*v0 + Q^5*u0*u1*v1 - Q^2*u0^2*u1^2*v1"
        " + u0^3*u1^3*v1 + Q^7*u1*v0*v1 + 2*Q^2*u0^2*u1^2*v0*v1 - Q^3*u0*u1^3*v0*v1"
        " - 2*u0^3*u1^3*v0*v1 - Q*u0^3*u1^3*v0*v1 - Q^2*u0^2*u1^2*v0^2*v1"
        " + u0^3*u1^3*v0^2*v1 + Q^3*u1^2*v0*v1^2))"),
}

ENVS = {"JD_CC1_3_2_m2": CC1_ENV}


def build_env(spec):
    env = {}
    for k, text in spec.items():
        env[k] = parse_poly(text, env)
    return env


def checksum(polys: dict) -> str:
    blob = json.dumps(polys, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def main():
    polys = {}
    entries = {}
    for name, src in SOURCES.items():
        env_spec = ENVS.get(name, {})
        p = parse_poly(src, build_env(env_spec))
        polys[name] = p.to_json_obj()
        entries[name] = {"source": src, "env": env_spec, "terms": polys[name]}
    doc = {"format": 1, "checksum": checksum(polys), "polynomials": entries}
    OUT.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT} ({len(entries)} polynomials)", file=sys.stderr)




def build_verlinde_tuples(max_N: int = 8):
    """Search admissible tuples and record them with their check outcome."""
    from dahajones.verlinde import check_radical_generator, search_tuples
    rows = []
    for p in search_tuples(max_N):
        r = check_radical_generator(p)
        rows.append({"N": p.N, "k1": str(p.k1), "k0": str(p.k0), "l1": str(p.l1),
                     "l0": str(p.l0), "M": r.M, "boundary": r.boundary_method, "ok": r.ok})
    doc = {"format": 1, "max_N": max_N, "l_grid": ["0", "1/2", "1"], "tuples": rows}
    path = OUT.parent / "verlinde_tuples.json"
    path.write_text(json.dumps(doc, indent=0) + "\n")
    print(f"wrote {path} ({len(rows)} tuples)", file=sys.stderr)


if __name__ == "__main__":
    main()
    if "--verlinde" in sys.argv:
        build_verlinde_tuples()
