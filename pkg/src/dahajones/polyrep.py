"""Polynomial representation and the E/P Askey-Wilson polynomials.

Laurent polynomials in X are plain dicts {exponent: coeff}.  Every
function takes a context ``ctx`` supplying the parameter images
(``q4``, ``hu0``, ``hu1``, ``hv0``, ``hv1``, the differences ``a0, a1,
b0, b1`` and ``one``/``zero``); an ``engine.Algebra`` is such a context
over LaurentPoly, and ``cyclotomic.CycloContext`` is one over a
cyclotomic field.

E-polynomials are produced unnormalized by the intertwiner recurrence

    E~_0 = 1,  E~_{m+1} = S0(E~_{-m}),  E~_{-m-1} = S1(E~_{m+1})

    S1 = U1^{-1} Y^{-1} - Y^{-1} U1^{-1},  S0 = Y^{-1} V1^{-1} - V1^{-1} Y^{-1}

and divided by their leading coefficient only when a caller asks for
rational coefficients.  This keeps every intermediate a Laurent
polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .symalg import ONE, ZERO, LaurentPoly, RatFn, SymalgError, star_conjugate


class InternalNonPolynomial(SymalgError):
    """A divided difference failed to be a Laurent polynomial (bug trap)."""


class SymmetrizationDegenerate(SymalgError):
    pass


class CertificationError(SymalgError):
    pass


# --------------------------------------------------------------------------
# Laurent polynomials in one variable, dict form

def xp_add(acc: dict, k: int, c):
    v = acc.get(k)
    v = c if v is None else v + c
    if v == 0:
        acc.pop(k, None)
    else:
        acc[k] = v


def xp_sum(*fs) -> dict:
    out: dict = {}
    for f in fs:
        for k, c in f.items():
            xp_add(out, k, c)
    return out


def xp_scale(f: Mapping, c) -> dict:
    if c == 0:
        return {}
    return {k: v * c for k, v in f.items()}


def xp_shift(f: Mapping, n: int) -> dict:
    return {k + n: v for k, v in f.items()}


def xp_sub(f, g) -> dict:
    return xp_sum(f, xp_scale(g, -1))


def _div_one_minus_sq(p: dict) -> dict:
    """p / (1 - W^2); raises InternalNonPolynomial when not exact."""
    if not p:
        return {}
    lo, hi = min(p), max(p)
    quot: dict = {}
    # p = (1 - W^2) q  gives  q_i = p_i + q_{i-2}
    for i in range(lo, hi - 1):
        v = p.get(i)
        prev = quot.get(i - 2)
        if prev is not None:
            v = prev if v is None else v + prev
        if v is not None and v != 0:
            quot[i] = v
    for i in (hi - 1, hi):
        # remaining top coefficients must be matched by -q_{i-2}
        v = p.get(i)
        prev = quot.get(i - 2)
        if prev is not None:
            v = prev if v is None else v + prev
        if i >= lo and v is not None and v != 0:
            raise InternalNonPolynomial("(1 - s)/(1 - X^2) left a remainder")
    return quot


def _hecke(f: Mapping, hu, a, b) -> dict:
    """u^{1/2} s + (a + b W)/(1 - W^2) (1 - s), with s: W^k -> W^{-k}."""
    out: dict = {}
    diff: dict = {}
    for k, c in f.items():
        xp_add(out, -k, hu * c)
        if k:
            xp_add(diff, k, c)
            xp_add(diff, -k, -c)
    if diff:
        dq = _div_one_minus_sq(diff)
        for k, c in dq.items():
            xp_add(out, k, a * c)
            xp_add(out, k + 1, b * c)
    return out


def _to_z(ctx, f: Mapping) -> dict:
    # X^k = q^{k/4} Z^{-k}
    return {-k: c * ctx.q4pow(k) for k, c in f.items()}


def _from_z(ctx, g: Mapping) -> dict:
    # Z^j = q^{j/4} X^{-j}
    return {-j: c * ctx.q4pow(j) for j, c in g.items()}


def op_U1(ctx, f):
    return _hecke(f, ctx.hu1, ctx.a1, ctx.b1)


def op_U1i(ctx, f):
    return xp_sub(op_U1(ctx, f), xp_scale(f, ctx.a1))


def op_U0(ctx, f):
    return _from_z(ctx, _hecke(_to_z(ctx, f), ctx.hu0, ctx.a0, ctx.b0))


def op_U0i(ctx, f):
    return xp_sub(op_U0(ctx, f), xp_scale(f, ctx.a0))


def op_V1(ctx, f):
    return op_U1i(ctx, xp_shift(f, -1))


def op_V1i(ctx, f):
    return xp_shift(op_U1(ctx, f), 1)


def op_V0(ctx, f):
    return xp_scale(xp_shift(op_U0i(ctx, f), 1), ctx.q4pow(-1))


def op_V0i(ctx, f):
    return xp_scale(op_U0(ctx, xp_shift(f, -1)), ctx.q4pow(1))


def op_Y(ctx, f):
    return op_U0(ctx, op_U1(ctx, f))


def op_Yi(ctx, f):
    return op_U1i(ctx, op_U0i(ctx, f))


def op_X(ctx, f):
    return xp_shift(f, 1)


def op_Xi(ctx, f):
    return xp_shift(f, -1)


OPERATORS = {
    "U0": op_U0, "U1": op_U1, "U0i": op_U0i, "U1i": op_U1i,
    "V0": op_V0, "V1": op_V1, "V0i": op_V0i, "V1i": op_V1i,
    "Y": op_Y, "Yi": op_Yi, "X": op_X, "Xi": op_Xi,
    "T": op_U1, "Ti": op_U1i, "pi": op_U0,
}


def apply_op(ctx, which: str, f: Mapping) -> dict:
    try:
        fn = OPERATORS[which]
    except KeyError:
        raise ValueError(f"unknown operator {which!r}") from None
    return fn(ctx, f)


def dl_operator(which: str, f: Mapping, ctx=None) -> dict:
    """Demazure-Lusztig type operator applied to f (dict or LaurentPoly in X)."""
    if ctx is None:
        ctx = default_algebra("A1" if which in ("T", "Ti", "pi") else "CC1")
    if isinstance(f, LaurentPoly):
        f = laurent_to_xpoly(f)
    return apply_op(ctx, which, f)


def y_power(ctx, f: Mapping, m: int) -> dict:
    g = dict(f)
    op = op_Y if m > 0 else op_Yi
    for _ in range(abs(m)):
        g = op(ctx, g)
    return g


def laurent_to_xpoly(p: LaurentPoly) -> dict:
    """Split off the X-exponent of a LaurentPoly."""
    return dict(sorted(p.by_var("X").items()))


def xpoly_to_laurent(f: Mapping) -> LaurentPoly:
    out = ZERO
    for k, c in f.items():
        if isinstance(c, RatFn):
            raise TypeError("RatFn coefficients cannot be folded into a LaurentPoly")
        out = out + c * LaurentPoly.var("X", k)
    return out


# --------------------------------------------------------------------------
# default contexts

_DEFAULTS: dict = {}


def default_algebra(kind: str):
    from .engine import Algebra
    if kind not in _DEFAULTS:
        _DEFAULTS[kind] = Algebra(kind)
    return _DEFAULTS[kind]


def _ctx_for(kind_or_ctx):
    if isinstance(kind_or_ctx, str):
        return default_algebra(kind_or_ctx.upper())
    return kind_or_ctx


# --------------------------------------------------------------------------
# E and P polynomials

def eigenvalue(ctx, n: int):
    """(u0 u1)^{-sgn(n)/2} q^{-n/2}, with sgn(0) = -1."""
    s = 1 if n > 0 else -1
    return (ctx.hu0 * ctx.hu1) ** (-s) * ctx.q4pow(-2 * n)


def s0_op(ctx, f):
    # Y^{-1} V1^{-1} - V1^{-1} Y^{-1}; the U0-commutator annihilates E_0 = 1
    return xp_sub(op_Yi(ctx, op_V1i(ctx, f)), op_V1i(ctx, op_Yi(ctx, f)))


def s1_op(ctx, f):
    return xp_sub(op_U1i(ctx, op_Yi(ctx, f)), op_Yi(ctx, op_U1i(ctx, f)))


def intertwiner_scalar(ctx, n: int):
    """The scalar c with S(E_prev) = c * E_n in the recurrence, n != 0."""
    uu = (ctx.hu0 * ctx.hu1) ** 2
    if n > 0:
        m = n - 1
        return (ctx.q4pow(4 * m + 2) * uu - ctx.one) * (ctx.q4pow(2 * m) * ctx.hu0) ** -1
    m = -n - 1
    return (ctx.q4pow(4 * m + 4) * uu - ctx.one) * \
        (ctx.q4pow(2 * m + 2) * ctx.hu0 * ctx.hu1 ** 2) ** -1


def _cache(ctx, name):
    d = ctx.__dict__.get(name)
    if d is None:
        d = {}
        ctx.__dict__[name] = d
    return d


def e_tilde(ctx, n: int) -> dict:
    """Unnormalized E-polynomial from the intertwiner recurrence."""
    memo = _cache(ctx, "_etilde")
    if n in memo:
        return memo[n]
    if n == 0:
        out = {0: ctx.one}
    elif n > 0:
        out = s0_op(ctx, e_tilde(ctx, -(n - 1)))
    else:
        out = s1_op(ctx, e_tilde(ctx, -n))
    memo[n] = out
    return out


@dataclass
class AWPolynomial:
    """E_n or P_n stored as numerator / leading coefficient."""

    kind: str
    index: int
    symmetric: bool
    numer: dict
    lc: object
    eigenvalue: object
    ctx: object

    @property
    def body(self) -> dict:
        """Coefficients as RatFn (X^index coefficient is 1)."""
        return {k: RatFn(c, self.lc) for k, c in sorted(self.numer.items())}

    def coeff(self, k: int) -> RatFn:
        return RatFn(self.numer.get(k, ZERO), self.lc)

    def evaluate_parts(self, point_pow=None):
        """(numerator value, lc) at X = (u1 v1)^{-1/2}."""
        pp = point_pow or self.ctx.pt_pow
        total = self.ctx.zero
        for k, c in self.numer.items():
            total = total + c * pp(k)
        return total, self.lc

    def evaluate(self) -> RatFn:
        num, den = self.evaluate_parts()
        return RatFn(num, den)


def _lc_product(ctx, n: int):
    """Product of the recurrence scalars leading from E_0 to E_n."""
    prod = ctx.one
    seq = []
    k = 0
    while k != n:
        k = -(k) + 1 if k <= 0 else -k
        seq.append(k)
        if abs(k) > abs(n) + 1:
            break
    for k in seq:
        prod = prod * intertwiner_scalar(ctx, k)
    return prod


def e_polynomial(kind, n: int, certify: bool = True) -> AWPolynomial:
    ctx = _ctx_for(kind)
    et = e_tilde(ctx, n)
    lc = et.get(n, ctx.zero)
    if lc == 0:
        raise CertificationError(f"E_{n} has vanishing leading coefficient")
    lam = eigenvalue(ctx, n)
    if certify:
        if any(abs(k) > abs(n) for k in et):
            raise CertificationError(f"E_{n} has support outside |m| <= {abs(n)}")
        if n > 0 and et.get(-n, 0) != 0:
            raise CertificationError(f"E_{n} has a nonzero X^{-n} term")
        if op_Y(ctx, et) != xp_scale(et, lam):
            raise CertificationError(f"E_{n} fails the Y-eigenvalue equation")
    return AWPolynomial(ctx.kind if hasattr(ctx, "kind") else "custom", n, False,
                        et, lc, lam, ctx)


def p_tilde(ctx, m: int) -> dict:
    memo = _cache(ctx, "_ptilde")
    if m in memo:
        return memo[m]
    if m == 0:
        out = {0: ctx.one}
    else:
        et = e_tilde(ctx, m)
        # 1 + u1^{1/2} U1; the V1 version is not s-symmetric
        out = xp_sum(et, xp_scale(op_U1(ctx, et), ctx.hu1))
    memo[m] = out
    return out


def p_polynomial(kind, m: int, certify: bool = True) -> AWPolynomial:
    if m < 0:
        raise ValueError("P_m needs m >= 0")
    ctx = _ctx_for(kind)
    pt = p_tilde(ctx, m)
    lc = pt.get(m, ctx.zero)
    if lc == 0:
        raise SymmetrizationDegenerate(f"symmetrized E_{m} has zero X^{m} coefficient")
    uq = ctx.hu0 * ctx.hu1 * ctx.q4pow(2 * m)
    lam = uq + uq ** -1
    if certify:
        for k, c in pt.items():
            if pt.get(-k, 0) != c:
                raise CertificationError(f"P_{m} is not symmetric")
        lhs = xp_sum(op_Y(ctx, pt), op_Yi(ctx, pt))
        if lhs != xp_scale(pt, lam):
            raise CertificationError(f"P_{m} fails the (Y + Y^-1)-eigenvalue equation")
        if isinstance(lc, LaurentPoly):
            slc = star_conjugate(lc)
            for k, c in pt.items():
                if star_conjugate(pt.get(-k, ZERO)) * lc != c * slc:
                    raise CertificationError(f"P_{m} is not formally real")
    return AWPolynomial(getattr(ctx, "kind", "custom"), m, True, pt, lc, lam, ctx)


def closed_form_parts(ctx, n: int):
    """Numerator and denominator of the closed evaluation of E_n at (u1 v1)^{-1/2}."""
    if n == 0:
        return ctx.one, ctx.one
    m = abs(n) - 1
    hq = lambda j: ctx.q4pow(2 * j)            # q^{j/2}
    u1 = ctx.hu1 ** 2
    uu = (ctx.hu0 * ctx.hu1) ** 2
    num = (ctx.hu1 * ctx.hv0 * ctx.hv1) ** (-(m + 1))
    top = m if n > 0 else m + 1
    for i in range(1, top + 1):
        num = num * (ctx.one + hq(i) * u1)
    for i in range(m + 1):
        qq = ctx.q4pow(2 * i + 1)
        num = num * (ctx.hv0 + qq * ctx.hu0 * ctx.hu1 * ctx.hv1)
        num = num * (ctx.one - qq * ctx.hu0 * ctx.hu1 * ctx.hv0 * ctx.hv1)
    den = ctx.one
    lo, hi = (m + 1, 2 * m + 1) if n > 0 else (m + 2, 2 * m + 2)
    for j in range(lo, hi + 1):
        den = den * (ctx.one - hq(j) * uu)
    return num, den


def e_evaluation_closed_form(n: int, kind="CC1") -> RatFn:
    num, den = closed_form_parts(_ctx_for(kind), n)
    return RatFn(num, den)


def symmetric_value_parts(ctx, m: int):
    """P_m at (u1 v1)^{-1/2} through the closed form, m >= 1."""
    num, den = closed_form_parts(ctx, m)
    return num * (ctx.one + ctx.hu1 ** 2), den
