"""Transcribed Askey-Wilson base cases: X-exponent -> (numerator, denominator)."""
from dahajones.symalg import RatFn, parse_poly

DEN = "1 - q^(1/2)*u0*u1"

E0 = {0: ("1", "1")}
E1 = {
    1: ("1", "1"),
    0: ("(q^(1/2)*u0/v0)^(1/2)*(1 - v0) + u0*(q*u1/v1)^(1/2)*(1 - v1)", DEN),
}
E_MINUS_1 = {
    -1: ("1", "1"),
    1: ("(1 - u1) + q^(1/2)*u1*(1 - u0)", DEN),
    0: ("(q^(1/2)*u0/v0)^(1/2)*(1 + q^(1/2)*u1)*(1 - v0)"
        " + (u1/v1)^(1/2)*(1 + q^(1/2)*u0)*(1 - v1)", DEN),
}
P1 = {
    1: ("1", "1"),
    -1: ("1", "1"),
    0: ("(q^(1/2)*u0/v0)^(1/2)*(1 + u1)*(1 - v0)"
        " + (u1/v1)^(1/2)*(1 + q^(1/2)*u0)*(1 - v1)", DEN),
}


def as_ratfns(table, den=None):
    """Parse a table; ``den`` replaces every non-trivial denominator."""
    out = {}
    for k, (num, d) in table.items():
        if den is not None and d != "1":
            d = den
        out[k] = RatFn(parse_poly(num), parse_poly(d))
    return out
