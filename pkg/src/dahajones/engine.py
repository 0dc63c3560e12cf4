"""Rank-one double affine Hecke algebras in PBW normal form.

One rewriting engine serves both algebras.  Elements are stored on the
internal basis X^n U1^e Y^m (e in {0, 1}), where U1 is the Hecke
generator T for A1.  For C^vC1 the external basis uses V1 instead of
U1; the two are related by V1 = X U1 + (v1^{1/2} - v1^{-1/2}).

Coefficients are LaurentPoly (or RatFn) in the images of the abstract
parameters q^{1/4}, u_i^{1/2}, v_i^{1/2}; a ``Params`` object fixes
these images, so the A1 algebra is just C^vC1 with u1^{1/2} -> t^{1/2}
and u0 = v0 = v1 = 1.

Commutation rules (all checked against the polynomial representation
in the test-suite):

    U1 X^n  = X^{-n} U1 + (a1 + b1 X) D_n(X)
    Y^k U1  = U1 Y^{-k} + (a1 + a0 Y^{-1}) D_{-k}(Y^{-1})
    U0 X^n  = q^{n/2} X^{-n} U0 + q^{n/4} (a0 + b0 Z) D_{-n}(Z),  Z = q^{1/4} X^{-1}
    U0      = U1 Y^{-1} + a0

with D_n(W) = (W^n - W^{-n}) / (1 - W^2), a_i = u_i^{1/2} - u_i^{-1/2},
b_i = v_i^{1/2} - v_i^{-1/2}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .symalg import (
    ONE, ZERO, GaussRat, LaurentPoly, Monomial, RatFn, SymalgError, coeff_conj,
    star_conjugate, substitute, var,
)

PARAM_NAMES = ("q4", "u0", "u1", "v0", "v1")


class EngineError(SymalgError):
    pass


class UnsupportedParameterAction(EngineError):
    """The letter moves parameters in a way the specialized ring cannot follow."""


# --------------------------------------------------------------------------
# parameters

def _is_unit_coeff(c) -> bool:
    g = GaussRat.of(c)
    return g.re * g.re + g.im * g.im == 1


class Params:
    """Images of q^{1/4}, u0^{1/2}, u1^{1/2}, v0^{1/2}, v1^{1/2}."""

    def __init__(self, images: Mapping[str, LaurentPoly], label: str = ""):
        missing = set(PARAM_NAMES) - set(images)
        if missing:
            raise ValueError(f"missing parameter images {sorted(missing)}")
        self.images = {k: images[k] for k in PARAM_NAMES}
        for k, v in self.images.items():
            if not v.is_monomial():
                raise ValueError(f"image of {k} must be a monomial")
        self.label = label

    @staticmethod
    def symbolic() -> "Params":
        return Params({"q4": var("q", Fraction(1, 4)), "u0": var("u0", Fraction(1, 2)),
                       "u1": var("u1", Fraction(1, 2)), "v0": var("v0", Fraction(1, 2)),
                       "v1": var("v1", Fraction(1, 2))}, "cc1")

    @staticmethod
    def a1() -> "Params":
        return Params({"q4": var("q", Fraction(1, 4)), "u0": ONE,
                       "u1": var("t", Fraction(1, 2)), "v0": ONE, "v1": ONE}, "a1")

    def replace(self, **kw) -> "Params":
        imgs = dict(self.images)
        imgs.update(kw)
        return Params(imgs, self.label + "*")

    def __getitem__(self, k):
        return self.images[k]

    def key(self):
        return tuple(self.images[k] for k in PARAM_NAMES)

    def __eq__(self, other):
        return isinstance(other, Params) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def ring_action(self, action: Mapping[str, tuple]) -> Callable[[LaurentPoly], LaurentPoly]:
        """Realize an abstract parameter action on the coefficient ring.

        ``action`` maps a parameter to (target, power, sign): its image is
        sign * target**power.  Returns a ring endomorphism of LaurentPoly.
        """
        want = {}
        for p in PARAM_NAMES:
            tgt, pw, sg = action.get(p, (p, 1, 1))
            want[p] = self.images[tgt] ** pw * sg
        if all(want[p] == self.images[p] for p in PARAM_NAMES):
            return _identity
        if all(star_conjugate(self.images[p]) == want[p] for p in PARAM_NAMES) and \
                all(_is_unit_coeff(next(iter(self.images[p].terms.values())))
                    for p in PARAM_NAMES):
            return star_conjugate
        assignment = {}
        for p in PARAM_NAMES:
            img = self.images[p]
            if img == ONE:
                if want[p] != ONE:
                    raise UnsupportedParameterAction(f"{p} is specialized to 1")
                continue
            (k, c), = img.terms.items()
            vs = img.variables()
            if c != 1 or len(vs) != 1:
                raise UnsupportedParameterAction(f"image of {p} is not a bare variable")
            v = vs.pop()
            mono = Monomial(key=k)
            if mono.exps[v] * {"q": 4}.get(v, 2) != 1:
                raise UnsupportedParameterAction(f"image of {p} is not a lattice generator")
            (wk, wc), = want[p].terms.items()
            new = (wc, Monomial(key=wk))
            if v in assignment and assignment[v] != new:
                raise UnsupportedParameterAction(f"conflicting images for {v}")
            assignment[v] = new
        return lambda poly: substitute(poly, assignment)


def _identity(p):
    return p


def map_coeff(c, fn):
    if fn is _identity:
        return c
    if isinstance(c, RatFn):
        return c.map(fn)
    return fn(c)


# --------------------------------------------------------------------------
# D-polynomials

def d_poly(n: int) -> dict:
    """(W^n - W^{-n}) / (1 - W^2) as {exponent: int}."""
    if n > 0:
        return {2 * j - n: -1 for j in range(n)}
    return {2 * j + n: 1 for j in range(-n)}


def _xp_add(acc: dict, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v == 0:
        acc.pop(key, None)
    else:
        acc[key] = v


# --------------------------------------------------------------------------
# the algebra

class Algebra:
    """Rewriting engine for one parameter specialization."""

    def __init__(self, kind: str = "CC1", params: Params | None = None):
        if kind not in ("A1", "CC1"):
            raise ValueError(f"unknown algebra kind {kind!r}")
        if params is None:
            params = Params.a1() if kind == "A1" else Params.symbolic()
        self.kind = kind
        self.params = params
        P = params.images
        self.q4 = P["q4"]
        self.hu0, self.hu1, self.hv0, self.hv1 = P["u0"], P["u1"], P["v0"], P["v1"]
        self.a0 = self.hu0 - self.hu0 ** -1
        self.a1 = self.hu1 - self.hu1 ** -1
        self.b0 = self.hv0 - self.hv0 ** -1
        self.b1 = self.hv1 - self.hv1 ** -1
        self.one = ONE
        self.zero = ZERO
        self._q4pow: dict = {}
        self._ymx_memo: dict = {}
        self._mid: dict = {}
        self._rU: dict = {}
        self._lU: dict = {}
        self._gens: dict = {}

    def __repr__(self):
        return f"Algebra({self.kind}, {self.params.label})"

    # scalars
    def q4pow(self, k: int) -> LaurentPoly:
        v = self._q4pow.get(k)
        if v is None:
            v = self.q4 ** k
            self._q4pow[k] = v
        return v

    def pt_pow(self, k: int) -> LaurentPoly:
        """((u1 v1)^{-1/2})^k, the evaluation point raised to k."""
        return (self.hu1 * self.hv1) ** (-k)

    def basis_value(self, n: int, e: int, m: int) -> LaurentPoly:
        return (self.hu1 * self.hv1) ** (-n) * self.hu1 ** e * (self.hu0 * self.hu1) ** m

    # small X-polynomials (dict exponent -> coeff)
    def _g(self, n: int) -> dict:
        """(a1 + b1 X) D_n(X)."""
        out: dict = {}
        for i, d in d_poly(n).items():
            _xp_add(out, i, self.a1 * d)
            _xp_add(out, i + 1, self.b1 * d)
        return out

    def _h(self, n: int) -> dict:
        """q^{n/4} (a0 + b0 Z) D_{-n}(Z) with Z = q^{1/4} X^{-1}, as X-polynomial."""
        out: dict = {}
        pre = self.q4pow(n)
        for i, d in d_poly(-n).items():
            _xp_add(out, -i, pre * self.q4pow(i) * self.a0 * d)
            _xp_add(out, -i - 1, pre * self.q4pow(i + 1) * self.b0 * d)
        return out

    def _ypoly_U(self, k: int) -> dict:
        """(a1 + a0 Y^{-1}) D_{-k}(Y^{-1}) as Y-polynomial."""
        out: dict = {}
        for i, d in d_poly(-k).items():
            _xp_add(out, -i, self.a1 * d)
            _xp_add(out, -i - 1, self.a0 * d)
        return out

    # normal-form building blocks: dicts (n, e, m) -> coeff
    def _rmul_U1_mono(self, n: int, e: int, m: int) -> dict:
        key = (n, e, m)
        hit = self._rU.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        # X^n U1^e Y^m U1 = X^n U1^e (U1 Y^{-m} + poly(Y))
        if e == 0:
            _xp_add(out, (n, 1, -m), ONE)
        else:
            _xp_add(out, (n, 1, -m), self.a1)
            _xp_add(out, (n, 0, -m), ONE)
        if m:
            for j, c in self._ypoly_U(m).items():
                _xp_add(out, (n, e, j), c)
        self._rU[key] = out
        return out

    def _lmul_U1_mono(self, n: int, e: int, m: int) -> dict:
        key = (n, e, m)
        hit = self._lU.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        if e == 0:
            _xp_add(out, (-n, 1, m), ONE)
        else:
            _xp_add(out, (-n, 1, m), self.a1)
            _xp_add(out, (-n, 0, m), ONE)
        if n:
            for j, c in self._g(n).items():
                _xp_add(out, (j, e, m), c)
        self._lU[key] = out
        return out

    def _apply_mono_map(self, terms: dict, fn) -> dict:
        out: dict = {}
        for (n, e, m), c in terms.items():
            for k2, c2 in fn(n, e, m).items():
                _xp_add(out, k2, c * c2)
        return out

    def _yx1(self, n: int) -> dict:
        """Y X^n in normal form."""
        out: dict = {}
        # U0 X^{-n} U1
        _xp_add(out, (n, 0, 1), self.q4pow(-2 * n))
        for j, c in self._h(-n).items():
            _xp_add(out, (j, 1, 0), c)
        # U0 g_n(X)
        for j, c in self._g(n).items():
            qc = self.q4pow(2 * j) * c
            _xp_add(out, (-j, 1, -1), qc)
            _xp_add(out, (-j, 0, 0), qc * self.a0)
            for i, c2 in self._h(j).items():
                _xp_add(out, (i, 0, 0), c * c2)
        return out

    def _yix1(self, n: int) -> dict:
        """Y^{-1} X^n = (U1 - a1)(U0 - a0) X^n in normal form."""
        inner: dict = {}
        qc = self.q4pow(2 * n)
        _xp_add(inner, (-n, 1, -1), qc)
        _xp_add(inner, (-n, 0, 0), qc * self.a0)
        for j, c in self._h(n).items():
            _xp_add(inner, (j, 0, 0), c)
        _xp_add(inner, (n, 0, 0), -self.a0)
        out = self._apply_mono_map(inner, self._lmul_U1_mono)
        for k, c in inner.items():
            _xp_add(out, k, -self.a1 * c)
        return out

    def _ymx(self, m: int, n: int) -> dict:
        key = (m, n)
        hit = self._ymx_memo.get(key)
        if hit is not None:
            return hit
        if m == 0:
            out = {(n, 0, 0): ONE}
        elif n == 0:
            out = {(0, 0, m): ONE}
        else:
            prev = self._ymx(m - 1, n) if m > 0 else self._ymx(m + 1, n)
            base = self._yx1 if m > 0 else self._yix1
            out = {}
            for (j, e, k), c in prev.items():
                block = base(j) if not e else self._apply_mono_map(
                    base(j), self._rmul_U1_mono)
                for (a, b, g), c2 in block.items():
                    _xp_add(out, (a, b, g + k), c * c2)
        self._ymx_memo[key] = out
        return out

    def _middle(self, e: int, m: int, n: int, e2: int) -> dict:
        """U1^e Y^m X^n U1^e2 in normal form."""
        key = (e, m, n, e2)
        hit = self._mid.get(key)
        if hit is not None:
            return hit
        z = self._ymx(m, n)
        if e:
            z = self._apply_mono_map(z, self._lmul_U1_mono)
        if e2:
            z = self._apply_mono_map(z, self._rmul_U1_mono)
        self._mid[key] = z
        return z

    # elements
    def element(self, terms: Mapping) -> "PBWElement":
        return PBWElement(self, {k: c for k, c in terms.items() if c != 0})

    def scalar(self, c) -> "PBWElement":
        if not isinstance(c, (LaurentPoly, RatFn)):
            c = LaurentPoly.const(c)
        return self.element({(0, 0, 0): c})

    def identity(self) -> "PBWElement":
        return self.scalar(ONE)

    def x_power(self, n: int, coeff=ONE) -> "PBWElement":
        return self.element({(n, 0, 0): coeff})

    def y_power(self, m: int, coeff=ONE) -> "PBWElement":
        return self.element({(0, 0, m): coeff})

    def from_xpoly(self, f: Mapping[int, object]) -> "PBWElement":
        return self.element({(n, 0, 0): c for n, c in f.items()})

    def gen(self, name: str) -> "PBWElement":
        """Generators and their inverses in normal form."""
        hit = self._gens.get(name)
        if hit is not None:
            return hit
        a0, a1, b0, b1 = self.a0, self.a1, self.b0, self.b1
        E = self.element
        table = {
            "X": lambda: E({(1, 0, 0): ONE}),
            "Xi": lambda: E({(-1, 0, 0): ONE}),
            "Y": lambda: E({(0, 0, 1): ONE}),
            "Yi": lambda: E({(0, 0, -1): ONE}),
            "U1": lambda: E({(0, 1, 0): ONE}),
            "U1i": lambda: E({(0, 1, 0): ONE, (0, 0, 0): -a1}),
            "U0": lambda: E({(0, 1, -1): ONE, (0, 0, 0): a0}),
            "U0i": lambda: E({(0, 1, -1): ONE}),
            "V1": lambda: E({(1, 1, 0): ONE, (0, 0, 0): b1}),
            "V1i": lambda: E({(1, 1, 0): ONE}),
            "V0": lambda: E({(1, 1, -1): self.q4pow(-1)}),
            "V0i": lambda: E({(1, 1, -1): self.q4pow(-1), (0, 0, 0): -b0}),
        }
        table["T"], table["Ti"] = table["U1"], table["U1i"]
        table["pi"] = table["U0"]
        if name not in table:
            raise KeyError(f"unknown generator {name!r}")
        g = table[name]()
        self._gens[name] = g
        return g

    def word(self, names: Iterable[str], coeff=ONE) -> "PBWElement":
        out = self.scalar(coeff)
        for nm in names:
            out = out * self.gen(nm)
        return out

    # evaluation
    def evaluate(self, h: "PBWElement"):
        total = ZERO
        for (n, e, m), c in h.terms_internal.items():
            total = total + c * self.basis_value(n, e, m)
        return total


def _coeff_add(a, b):
    return b if a is None else a + b


@dataclass(frozen=True, eq=False)
class PBWElement:
    """Sum of coeff * X^n U1^e Y^m on the internal basis."""

    alg: Algebra
    terms_internal: dict = field(default_factory=dict)

    @property
    def kind(self):
        return self.alg.kind

    @property
    def terms(self) -> dict:
        """Terms on the external basis (X^n T^e Y^m for A1, X^n V1^e Y^m for C^vC1)."""
        if self.alg.kind == "A1":
            return dict(self.terms_internal)
        out: dict = {}
        b1 = self.alg.b1
        for (n, e, m), c in self.terms_internal.items():
            if e == 0:
                _xp_add(out, (n, 0, m), c)
            else:
                _xp_add(out, (n - 1, 1, m), c)
                _xp_add(out, (n - 1, 0, m), -b1 * c)
        return out

    @staticmethod
    def from_external(alg: Algebra, terms: Mapping) -> "PBWElement":
        if alg.kind == "A1":
            return alg.element(terms)
        out: dict = {}
        for (n, e, m), c in terms.items():
            if e == 0:
                _xp_add(out, (n, 0, m), c)
            else:
                _xp_add(out, (n + 1, 1, m), c)
                _xp_add(out, (n, 0, m), alg.b1 * c)
        return alg.element(out)

    def _check(self, other):
        if not isinstance(other, PBWElement):
            return None
        if other.alg is not self.alg:
            raise EngineError("operands live in different algebras")
        return other

    def __add__(self, other):
        if self._check(other) is None:
            return NotImplemented
        out = dict(self.terms_internal)
        for k, c in other.terms_internal.items():
            _xp_add(out, k, c)
        return PBWElement(self.alg, out)

    def __neg__(self):
        return PBWElement(self.alg, {k: -c for k, c in self.terms_internal.items()})

    def __sub__(self, other):
        if self._check(other) is None:
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "PBWElement":
        if c == 0:
            return PBWElement(self.alg, {})
        return PBWElement(self.alg, {k: v * c for k, v in self.terms_internal.items()})

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, RatFn, int, Fraction, GaussRat)):
            return self.scale(other)
        if self._check(other) is None:
            return NotImplemented
        return pbw_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, RatFn, int, Fraction, GaussRat)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise EngineError("negative powers of general elements are not computed")
        out, base = self.alg.identity(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.alg is other.alg and self.terms_internal == other.terms_internal

    __hash__ = None

    def is_zero(self):
        return not self.terms_internal

    def map_coeffs(self, fn) -> "PBWElement":
        out = {}
        for k, c in self.terms_internal.items():
            c2 = map_coeff(c, fn)
            if c2 != 0:
                out[k] = c2
        return PBWElement(self.alg, out)

    def to_text(self) -> str:
        if not self.terms_internal:
            return "0"
        hname = "T" if self.alg.kind == "A1" else "V1"
        parts = []
        for (n, e, m), c in sorted(self.terms.items()):
            cs = c.to_text()
            parts.append(f"({cs})*X^{n}*{hname}^{e}*Y^{m}")
        return " + ".join(parts)

    __str__ = to_text


def pbw_multiply(a: PBWElement, b: PBWElement) -> PBWElement:
    """Normal form of a*b."""
    if a.alg is not b.alg:
        raise EngineError("operands live in different algebras")
    alg = a.alg
    out: dict = {}
    get = out.get
    # group b by (n, e) so each middle product is fetched once per pair
    right: dict = {}
    for (n2, e2, m2), c2 in b.terms_internal.items():
        right.setdefault((n2, e2), []).append((m2, c2))
    left: dict = {}
    for (n1, e1, m1), c1 in a.terms_internal.items():
        left.setdefault((e1, m1), []).append((n1, c1))
    for (e1, m1), lterms in left.items():
        for (n2, e2), rterms in right.items():
            mid = alg._middle(e1, m1, n2, e2)
            for (x, u, y), cm in mid.items():
                for n1, c1 in lterms:
                    c1m = c1 * cm
                    for m2, c2 in rterms:
                        k = (x + n1, u, y + m2)
                        v = get(k)
                        v = c1m * c2 if v is None else v + c1m * c2
                        out[k] = v
    return PBWElement(alg, {k: c for k, c in out.items() if c != 0})


def evaluate_coinvariant(h: PBWElement):
    """{H}: act on 1 and evaluate at X = (u1 v1)^{-1/2} (t^{-1/2} for A1)."""
    return h.alg.evaluate(h)


# --------------------------------------------------------------------------
# automorphisms

_MAT = {
    "tau+": ((1, 1), (0, 1)), "tau+^-1": ((1, -1), (0, 1)),
    "tau+^2": ((1, 2), (0, 1)), "tau+^-2": ((1, -2), (0, 1)),
    "tau-": ((1, 0), (1, 1)), "tau-^-1": ((1, 0), (-1, 1)),
    "eta": ((-1, 0), (0, 1)),
    "sigma": ((0, 1), (-1, 0)), "sigma^-1": ((0, -1), (1, 0)),
    "sigma^2": ((-1, 0), (0, -1)),
    "phi": ((0, -1), (-1, 0)), "star": ((-1, 0), (0, -1)),
    "sx": ((1, 0), (0, 1)), "sy": ((1, 0), (0, 1)),
    "s*": ((1, 0), (0, 1)), "sq": ((1, 0), (0, 1)),
}

_SWAP_U0V0 = {"u0": ("v0", 1, 1), "v0": ("u0", 1, 1)}
_SWAP_V0V1 = {"v0": ("v1", 1, 1), "v1": ("v0", 1, 1)}
_SWAP_U0V1 = {"u0": ("v1", 1, 1), "v1": ("u0", 1, 1)}
_INVERT = {p: (p, -1, 1) for p in PARAM_NAMES}


def _neg(*names):
    return {p: (p, 1, -1) for p in names}


# images: generator -> (sign, q^{1/4}-power, word)
_IMAGES = {
    "tau+": ({"Y": (1, -1, ("V1i", "Yi", "U1")), "Yi": (1, 1, ("U1i", "Y", "V1"))},
             _SWAP_U0V0),
    "tau+^-1": ({"Y": (1, -1, ("U1", "Yi", "V1i")), "Yi": (1, 1, ("V1", "Y", "U1i"))},
                _SWAP_U0V0),
    "tau+^2": ({"Y": (1, 0, ("X", "Y", "V1", "U1")),
                "Yi": (1, 0, ("U1i", "V1i", "Yi", "Xi"))}, {}),
    "tau+^-2": ({"Y": (1, 0, ("U1", "V1", "Y", "U1i", "V1i")),
                 "Yi": (1, 0, ("V1", "U1", "Yi", "V1i", "U1i"))}, {}),
    "tau-": ({"X": (1, 1, ("Y", "V1", "U1i")), "Xi": (1, -1, ("U1", "V1i", "Yi"))},
             _SWAP_V0V1),
    "tau-^-1": ({"X": (1, 1, ("V1", "Y", "U1i")), "Xi": (1, -1, ("U1", "Yi", "V1i"))},
                _SWAP_V0V1),
    "eta": ({"X": (1, 0, ("Xi",)), "Xi": (1, 0, ("X",)), "U1": (1, 0, ("U1i",)),
             "Y": (1, 0, ("U1", "Yi", "U1i")), "Yi": (1, 0, ("U1", "Y", "U1i"))}, _INVERT),
    "sigma": ({"X": (1, 0, ("Yi",)), "Xi": (1, 0, ("Y",)),
               "Y": (1, 0, ("U1i", "Xi", "U1")), "Yi": (1, 0, ("U1i", "X", "U1"))},
              _SWAP_U0V1),
    "sigma^-1": ({"X": (1, 0, ("U1", "Yi", "U1i")), "Xi": (1, 0, ("U1", "Y", "U1i")),
                  "Y": (1, 0, ("Xi",)), "Yi": (1, 0, ("X",))}, _SWAP_U0V1),
    "sigma^2": ({"X": (1, 0, ("U1i", "X", "U1")), "Xi": (1, 0, ("U1i", "Xi", "U1")),
                 "Y": (1, 0, ("U1i", "Y", "U1")), "Yi": (1, 0, ("U1i", "Yi", "U1"))}, {}),
    "phi": ({"X": (1, 0, ("Yi",)), "Xi": (1, 0, ("Y",)),
             "Y": (1, 0, ("Xi",)), "Yi": (1, 0, ("X",))}, _SWAP_U0V1),
    "star": ({"X": (1, 0, ("Xi",)), "Xi": (1, 0, ("X",)), "U1": (1, 0, ("U1i",)),
              "Y": (1, 0, ("Yi",)), "Yi": (1, 0, ("Y",))}, _INVERT),
    "sx": ({"X": (-1, 0, ("X",)), "Xi": (-1, 0, ("Xi",))}, _neg("v0", "v1")),
    "sy": ({"Y": (-1, 0, ("Y",)), "Yi": (-1, 0, ("Yi",))}, _neg("u0", "v0")),
    "s*": ({"U1": (-1, 0, ("U1",))}, _neg("u0", "u1", "v0", "v1")),
    "sq": ({"U1": (-1, 0, ("U1",)), "X": (-1, 0, ("X",)), "Xi": (-1, 0, ("Xi",)),
            "Y": (-1, 0, ("Y",)), "Yi": (-1, 0, ("Yi",))}, _neg("u1", "q4")),
}
ANTI = frozenset({"phi", "star"})
COMPOSITES = {"eps": ("phi", "star")}
_ALIASES = {"tau+^1": "tau+", "tau-^1": "tau-", "tau+^-1": "tau+^-1"}
LETTERS = tuple(_IMAGES) + tuple(COMPOSITES)


def letter_matrix(letter: str):
    if letter in COMPOSITES:
        return matmul(*(letter_matrix(x) for x in COMPOSITES[letter]))
    return _MAT[letter]


def matmul(*ms):
    out = ((1, 0), (0, 1))
    for m in ms:
        (a, b), (c, d) = out
        (e, f), (g, h) = m
        out = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
    return out


def param_action(letter: str) -> dict:
    """Action of a letter on the abstract parameters: p -> (target, power, sign)."""
    if letter in COMPOSITES:
        acts = [param_action(x) for x in COMPOSITES[letter]]
        return _compose_actions(acts)
    return dict(_IMAGES[letter][1])


def _compose_actions(acts) -> dict:
    """Compose actions listed left to right (the rightmost acts first)."""
    out = {p: (p, 1, 1) for p in PARAM_NAMES}
    for act in reversed(acts):
        new = {}
        for p, (tgt, pw, sg) in out.items():
            t2, pw2, sg2 = act.get(tgt, (tgt, 1, 1))
            new[p] = (t2, pw * pw2, sg * sg2)
        out = new
    return out


@dataclass(frozen=True)
class TauWord:
    """Letters listed left to right; the rightmost acts first."""

    letters: tuple

    def __init__(self, letters: Iterable[str]):
        norm = []
        for x in letters:
            x = _ALIASES.get(x, x)
            if x not in _IMAGES and x not in COMPOSITES:
                raise ValueError(f"unknown automorphism letter {x!r}")
            norm.append(x)
        object.__setattr__(self, "letters", tuple(norm))

    @property
    def matrix(self):
        return matmul(*(letter_matrix(x) for x in self.letters))

    def param_action(self) -> dict:
        return _compose_actions([param_action(x) for x in self.letters])

    def __mul__(self, other: "TauWord") -> "TauWord":
        return TauWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)


def _image_table(alg: Algebra, letter: str) -> dict:
    cache = alg.__dict__.setdefault("_img_cache", {})
    hit = cache.get(letter)
    if hit is not None:
        return hit
    spec, _ = _IMAGES[letter]
    table = {}
    for g in ("X", "Xi", "U1", "Y", "Yi"):
        if g in spec:
            sg, qp, word = spec[g]
            table[g] = alg.word(word, alg.q4pow(qp) * sg)
        else:
            table[g] = alg.gen(g)
    cache[letter] = table
    return table


def _power(alg, table, pos: str, neg: str, k: int, cache: dict):
    key = (pos, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if k == 0:
        out = alg.identity()
    elif k > 0:
        out = _power(alg, table, pos, neg, k - 1, cache) * table[pos]
    else:
        out = _power(alg, table, pos, neg, k + 1, cache) * table[neg]
    cache[key] = out
    return out


def _apply_letter(letter: str, h: PBWElement) -> PBWElement:
    alg = h.alg
    if letter in COMPOSITES:
        for x in reversed(COMPOSITES[letter]):
            h = _apply_letter(x, h)
        return h
    table = _image_table(alg, letter)
    ring = alg.params.ring_action(param_action(letter))
    powers: dict = {}
    anti = letter in ANTI
    one_x = table["X"] == alg.gen("X") and table["Xi"] == alg.gen("Xi")
    result = PBWElement(alg, {})
    if not anti:
        groups: dict = {}
        for (n, e, m), c in h.terms_internal.items():
            groups.setdefault(m, []).append((n, e, map_coeff(c, ring)))
        for m, items in sorted(groups.items()):
            left = PBWElement(alg, {})
            by_e: dict = {}
            for n, e, c in items:
                by_e.setdefault(e, []).append((n, c))
            for e, lst in sorted(by_e.items()):
                if one_x:
                    xs = alg.element({(n, 0, 0): c for n, c in lst})
                else:
                    xs = PBWElement(alg, {})
                    for n, c in lst:
                        xs = xs + _power(alg, table, "X", "Xi", n, powers).scale(c)
                left = left + (xs * table["U1"] if e else xs)
            result = result + left * _power(alg, table, "Y", "Yi", m, powers)
    else:
        groups = {}
        for (n, e, m), c in h.terms_internal.items():
            groups.setdefault(n, []).append((e, m, map_coeff(c, ring)))
        for n, items in sorted(groups.items()):
            right = PBWElement(alg, {})
            for e, m, c in items:
                term = _power(alg, table, "Y", "Yi", m, powers).scale(c)
                if e:
                    term = term * table["U1"]
                right = right + term
            result = result + right * _power(alg, table, "X", "Xi", n, powers)
    return result


def apply_automorphism(w: TauWord | Iterable[str] | str, h: PBWElement) -> PBWElement:
    """Apply the letters right to left, renormalizing after each one."""
    if isinstance(w, str):
        w = TauWord([w])
    elif not isinstance(w, TauWord):
        w = TauWord(w)
    for letter in reversed(w.letters):
        h = _apply_letter(letter, h)
    return h


def transform_scalar(alg: Algebra, w: TauWord | Iterable[str], c):
    """Parameter action of a word on a scalar."""
    if not isinstance(w, TauWord):
        w = TauWord(w)
    for letter in reversed(w.letters):
        c = map_coeff(c, alg.params.ring_action(param_action(letter)))
    return c


def act_on_polynomial(h: PBWElement, f: Mapping[int, object]) -> dict:
    """Action of h on a Laurent polynomial in X, given as {exponent: coeff}."""
    from . import polyrep
    ctx = h.alg
    out: dict = {}
    ymemo: dict = {}
    for (n, e, m), c in h.terms_internal.items():
        key = (e, m)
        g = ymemo.get(key)
        if g is None:
            g = polyrep.y_power(ctx, f, m)
            if e:
                g = polyrep.apply_op(ctx, "U1", g)
            ymemo[key] = g
        for k, v in g.items():
            _xp_add(out, k + n, c * v)
    return out


_X_FIXING = frozenset({"tau+", "tau+^-1", "tau+^2", "tau+^-2"})
_YU_FIXING = frozenset({"tau-", "tau-^-1"})


def _outer_value(alg: Algebra, letter: str, n: int, e: int, m: int):
    """{letter(X^n U1^e Y^m)} for a letter fixing X, or fixing U1 and Y."""
    cache = alg.__dict__.setdefault("_outer_cache", {})
    if letter in _YU_FIXING:
        # letter(X)^n U1^e Y^m (1) = letter(X)^n (1) * u1^{e/2} (u0 u1)^{m/2}
        g = _image_power_on_one(alg, letter, "X", n, cache)
        scale = alg.basis_value(0, e, m)
        shift = 0
    else:
        g = _image_power_on_one(alg, letter, "Y", m, cache)
        if e:
            key = (letter, "U1", m)
            if key not in cache:
                from . import polyrep
                cache[key] = polyrep.apply_op(alg, "U1", g)
            g = cache[key]
        scale = alg.one
        shift = n
    total = alg.zero
    for k, c in g.items():
        total = total + c * alg.pt_pow(shift + k)
    return total * scale


def _image_power_on_one(alg: Algebra, letter: str, gen: str, k: int, cache: dict) -> dict:
    """letter(gen)^k applied to 1, iterating the image word as operators."""
    from . import polyrep
    key = (letter, gen, k)
    g = cache.get(key)
    if g is not None:
        return g
    if k == 0:
        g = {0: alg.one}
    else:
        name = gen if k > 0 else gen + "i"
        spec = _IMAGES[letter][0]
        g = _image_power_on_one(alg, letter, gen, k - 1 if k > 0 else k + 1, cache)
        if name in spec:
            sg, qp, word = spec[name]
            for op in reversed(word):
                g = polyrep.apply_op(alg, op, g)
            g = polyrep.xp_scale(g, alg.q4pow(qp) * sg)
        else:
            g = polyrep.apply_op(alg, name, g)
    cache[key] = g
    return g


def evaluate_image(w: TauWord | Iterable[str], h: PBWElement):
    """{w(h)}.

    The leftmost letter is never applied to the (usually large) element:
    tau_- fixes U1 and Y, and tau_+ fixes X, so its contribution to the
    evaluation only depends on small cached images.
    """
    if not isinstance(w, TauWord):
        w = TauWord(w)
    if not w.letters:
        return h.alg.evaluate(h)
    outer = w.letters[0]
    if outer not in _X_FIXING and outer not in _YU_FIXING:
        return h.alg.evaluate(apply_automorphism(w, h))
    h = apply_automorphism(TauWord(w.letters[1:]), h)
    alg = h.alg
    ring = alg.params.ring_action(param_action(outer))
    total = alg.zero
    for (n, e, m), c in h.terms_internal.items():
        total = total + map_coeff(c, ring) * _outer_value(alg, outer, n, e, m)
    return total
