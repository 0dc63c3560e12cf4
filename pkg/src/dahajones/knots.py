"""Torus-knot lifts and DAHA-Jones polynomials.

Both pipelines compute JD = {gamma(P_m)} / {P_m} from the symmetric
polynomial P~_m before monic rescaling; its leading coefficient is put
back only when gamma moves it.  The quotient must come out as a Laurent
polynomial.  Exact division certifies that; a remainder raises
NotPolynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .engine import Algebra, Params, TauWord, evaluate_image, transform_scalar
from .polyrep import p_tilde
from .symalg import (
    NotDivisible, NotPolynomial, LaurentPoly, SymalgError, star_conjugate, tilde_normalize,
    var,
)


class InvalidKnot(SymalgError):
    pass


class NotCoprime(InvalidKnot):
    pass


class EvenFirstEntry(InvalidKnot):
    """A C^vC_1 lift was asked for with r even."""


@dataclass(frozen=True)
class GammaLift:
    kind: str
    r: int
    s: int
    word: TauWord

    @property
    def matrix(self):
        return self.word.matrix

    @property
    def parity(self) -> int:
        return self.s % 2

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c


def _check_knot(r: int, s: int):
    if (r, s) == (0, 0) or gcd(r, s) != 1:
        raise NotCoprime(f"T({r},{s}) needs gcd(r, s) = 1")


def _nearest(x: int, step: int) -> int:
    """Smallest positive representative of x modulo step (step > 0)."""
    return (x - 1) % step + 1


def lift_word(kind: str, r: int, s: int) -> GammaLift:
    """A word in tau_+, tau_- whose matrix has first column (r, s) and det 1.

    For CC1 only tau_+^{+-2} and tau_-^{+-1} are used, which keeps the
    upper-right entry even.  Negative r is reached through sigma^2 = -1,
    placed rightmost: it is central, and applied first it only touches P_m.
    """
    kind = kind.upper()
    _check_knot(r, s)
    if kind == "CC1" and r % 2 == 0:
        raise EvenFirstEntry(f"T({r},{s}): CC1 lifts need r odd; swap r and s first")
    if r == 0:
        # only (0, +-1) is coprime; tau_+^{-s} tau_-^{s} has first column (0, s)
        pair = ["tau+^-1", "tau-"] if s > 0 else ["tau+", "tau-^-1"]
        return GammaLift(kind, r, s, TauWord(pair))
    r0, s0 = r, s
    letters: list = []
    flip = r < 0
    if flip:
        r, s = -r, -s
    up = 2 if kind == "CC1" else 1
    while (r, s) != (1, 0):
        if r > up * abs(s) and s != 0:
            # r = r' + up*b*s with r' in (0, up*|s|]
            r2 = _nearest(r, up * abs(s))
            b = (r - r2) // (up * s)
            letter = ("tau+^2" if b > 0 else "tau+^-2") if up == 2 else \
                ("tau+" if b > 0 else "tau+^-1")
            letters.extend([letter] * abs(b))
            r = r2
        else:
            # s = s' + a*r with |s'| < r/2 (CC1) or 0 <= s' < r (A1)
            s2 = s % r
            if up == 2 and 2 * s2 > r:
                s2 -= r
            a = (s - s2) // r
            letters.extend(["tau-" if a > 0 else "tau-^-1"] * abs(a))
            s = s2
    if flip:
        letters.append("sigma^2")
    lift = GammaLift(kind, r0, s0, TauWord(letters))
    assert lift.matrix[0][0] == r0 and lift.matrix[1][0] == s0 and lift.det == 1
    return lift


# --------------------------------------------------------------------------
# algebras by specialization

_ALGEBRAS: dict = {}


def algebra_for(kind: str, params: Params | None = None) -> Algebra:
    kind = kind.upper()
    if params is None:
        params = Params.a1() if kind == "A1" else Params.symbolic()
    key = (kind, params)
    alg = _ALGEBRAS.get(key)
    if alg is None:
        alg = _ALGEBRAS[key] = Algebra(kind, params)
    return alg


def params_a1_reduction() -> Params:
    """u1^{1/2} -> t^{1/2}, the rest 1 (same q)."""
    return Params.a1()


def params_q2_reduction() -> Params:
    """q^{1/4} -> q^{1/2}, u0^{1/2} = u1^{1/2} = t^{1/2}, v = 1."""
    t = var("t", Fraction(1, 2))
    one = LaurentPoly.const(1)
    return Params({"q4": var("q", Fraction(1, 2)), "u0": t, "u1": t, "v0": one, "v1": one},
                  "q2tt")


def params_prop23() -> Params:
    """v = 1, u1^{1/2} = q^{1/2} = u0^{-1/2}, with q^{1/4} -> q^{1/2}.

    The closed form q^{-m(rsm/2 + p)}(1 + q^{mr})/(1 + q^m) holds in the
    doubled-q convention (at r = 1 it must agree with (q^{m/2}u1u0)^{-sm/2}).
    """
    one = LaurentPoly.const(1)
    h = var("q", Fraction(1, 2))
    return Params({"q4": h, "u0": h ** -1, "u1": h, "v0": one, "v1": one}, "prop23")


# --------------------------------------------------------------------------
# JD

def _cached_pt(alg: Algebra, m: int) -> dict:
    return p_tilde(alg, m)


def _image_value(alg: Algebra, word: TauWord, k: int):
    """{word(X^k)}, cached per algebra."""
    cache = alg.__dict__.setdefault("_jd_cache", {})
    key = (word.letters, k)
    v = cache.get(key)
    if v is None:
        v = cache[key] = evaluate_image(word, alg.x_power(k))
    return v


def jd_quotient(alg: Algebra, lift: GammaLift, m: int) -> LaurentPoly:
    """{gamma(P_m)} / {P_m}, certified to be a Laurent polynomial.

    Automorphisms here act on a single algebra, with their parameter
    action folded into the coefficients.  In this picture the evaluation
    point stays put: tau_- maps E_n to a scalar multiple of E_n itself.
    """
    if m < 0:
        raise ValueError("color m must be nonnegative")
    pt = _cached_pt(alg, m)
    # gamma(c X^k) = gamma(c) gamma(X^k): only coefficient-one powers of X
    # travel through the automorphisms
    num = alg.zero
    for k, c in pt.items():
        num = num + transform_scalar(alg, lift.word, c) * _image_value(alg, lift.word, k)
    den = alg.evaluate(alg.from_xpoly(pt))
    lc = pt[m]
    glc = transform_scalar(alg, lift.word, lc)
    if glc != lc:
        num, den = num * lc, den * glc
    num, den = _as_poly(num), _as_poly(den)
    try:
        return num.divide_exact(den)
    except NotDivisible:
        raise NotPolynomial(
            f"JD for T({lift.r},{lift.s}), m={m} is not a Laurent polynomial") from None


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    from .symalg import ratfn_to_polynomial
    return ratfn_to_polynomial(x)


def jd_a1(r: int, s: int, m: int, tilde: bool = False) -> LaurentPoly:
    """A_1 DAHA-Jones polynomial of T(r, s) colored by m."""
    out = jd_for_lift(lift_word("A1", r, s), m)
    return tilde_normalize(out, ("q", "t"))[0] if tilde else out


def cc1_orientation(r: int, s: int) -> tuple:
    """(r, s, swapped): r made odd by transposition when r is even."""
    _check_knot(r, s)
    if r % 2 == 0:
        return s, r, True
    return r, s, False


def jd_cc1(r: int, s: int, m: int, params: Params | None = None) -> LaurentPoly:
    """C^vC_1 DAHA-Jones polynomial; T(r, s) with r even is computed as T(s, r)."""
    r2, s2, _ = cc1_orientation(r, s)
    return jd_for_lift(lift_word("CC1", r2, s2), m, params)


def jd_for_lift(lift: GammaLift, m: int, params: Params | None = None) -> LaurentPoly:
    """JD through an explicit lift (any word with the right first column)."""
    key = (lift.kind, params, lift.word.letters, m)
    hit = _JD_CACHE.get(key)
    if hit is None:
        hit = _JD_CACHE[key] = jd_quotient(algebra_for(lift.kind, params), lift, m)
    return hit


def extend_lift(lift: GammaLift, letters) -> GammaLift:
    """The same knot through word * letters; letters must fix the first column."""
    word = TauWord(lift.word.letters + tuple(letters))
    out = GammaLift(lift.kind, lift.r, lift.s, word)
    if (out.matrix[0][0], out.matrix[1][0]) != (lift.r, lift.s):
        raise ValueError("extra letters move the first column")
    return out


_JD_CACHE: dict = {}


def jd_cc1_unit_formula(s: int, m: int) -> LaurentPoly:
    """(q^{m/2} u1 u0)^{-sm/2}, the value for T(1, s)."""
    base = var("q", Fraction(m, 2)) * var("u1") * var("u0")
    return _half_power(base, -s * m)


def _half_power(p: LaurentPoly, k: int) -> LaurentPoly:
    """p^{k/2} for a monomial p."""
    (key, c), = p.terms.items()
    if c != 1:
        raise ValueError("only monic monomials have a canonical square root")
    from .symalg import Monomial
    exps = {v: e * Fraction(k, 2) for v, e in Monomial(key=key).exps.items()}
    return LaurentPoly.monomial(exps)


def prop23_formula(r: int, s: int, m: int) -> LaurentPoly:
    """q^{-m(rsm/2 + p)} (1 + q^{mr}) / (1 + q^m) for r = 2p + 1."""
    r2, s2, _ = cc1_orientation(r, s)
    p = (r2 - 1) // 2
    e = -m * (Fraction(r2 * s2 * m, 2) + p)
    one = LaurentPoly.const(1)
    num = one + var("q", m * r2)
    return var("q", e) * num.divide_exact(one + var("q", m))


def mirror(p: LaurentPoly) -> LaurentPoly:
    return star_conjugate(p)
