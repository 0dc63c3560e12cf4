"""Exact sparse Laurent polynomials over the Gaussian rationals.

Variables live on fixed fractional lattices: q in steps of 1/4, the
parameters t, a, u0, u1, v0, v1 in steps of 1/2 and X in integer steps.
Internally a monomial is a single python int: every exponent is stored
in lattice units inside a 20-bit biased field, q in the most significant
field.  Adding two keys (and subtracting the bias once) multiplies the
monomials, and comparing keys is lexicographic comparison on
(q, t, a, u0, u1, v0, v1, X).
"""
from __future__ import annotations

import heapq
import json
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

VARS = ("q", "t", "a", "u0", "u1", "v0", "v1", "X")
LATTICE = {"q": 4, "t": 2, "a": 2, "u0": 2, "u1": 2, "v0": 2, "v1": 2, "X": 1}
VAR_INDEX = {v: i for i, v in enumerate(VARS)}
PARAMS = VARS[:-1]

_BITS = 20
_MASK = (1 << _BITS) - 1
_BIAS = 1 << (_BITS - 1)
_SHIFT = tuple(_BITS * (len(VARS) - 1 - i) for i in range(len(VARS)))
ZERO_KEY = sum(_BIAS << s for s in _SHIFT)


class SymalgError(Exception):
    pass


class LatticeViolation(SymalgError):
    pass


class ZeroPolynomial(SymalgError):
    pass


class NotPolynomial(SymalgError):
    pass


class NotDivisible(SymalgError):
    pass


class ParseError(SymalgError):
    pass


# --------------------------------------------------------------------------
# Gaussian rationals

def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _int_if_possible(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class GaussRat:
    """re + im*I with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @staticmethod
    def of(x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        return GaussRat(x, 0)

    def simplify(self):
        """Drop to a plain rational (int when possible) if the imaginary part vanishes."""
        if self.im == 0:
            return _int_if_possible(self.re)
        return self

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, o):
        if isinstance(o, GaussRat):
            return GaussRat(self.re + o.re, self.im + o.im).simplify()
        if isinstance(o, (int, Fraction)):
            return GaussRat(self.re + o, self.im).simplify()
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, GaussRat):
            return GaussRat(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re).simplify()
        if isinstance(o, (int, Fraction)):
            return GaussRat(self.re * o, self.im * o).simplify()
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("GaussRat division by zero")
        return GaussRat(self.re / n, -self.im / n).simplify()

    def __truediv__(self, o):
        if isinstance(o, GaussRat):
            return self * o.inverse()
        if isinstance(o, (int, Fraction)):
            return GaussRat(self.re / o, self.im / o).simplify()
        return NotImplemented

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = 1, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({self.re}, {self.im})"


I_UNIT = GaussRat(0, 1)


def coeff_conj(c):
    return c.conjugate() if isinstance(c, GaussRat) else c


def coeff_div(a, b):
    if isinstance(a, GaussRat) or isinstance(b, GaussRat):
        return GaussRat.of(a) / b
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _int_if_possible(Fraction(a) / b)


def coeff_pow(c, k: int):
    if k >= 0:
        return c ** k
    if isinstance(c, GaussRat):
        return c ** k
    return _int_if_possible(Fraction(1) / Fraction(c) ** (-k))


def render_coeff(c) -> str:
    if isinstance(c, GaussRat):
        re, im = c.re, c.im
        ims = "I" if im == 1 else "-I" if im == -1 else f"{im}*I"
        if re == 0:
            return ims
        sign = "+" if im > 0 else ""
        return f"({re}{sign}{ims})"
    return str(c)


# --------------------------------------------------------------------------
# monomial keys

def key_from_units(units: Iterable[int]) -> int:
    k = 0
    for e, s in zip(units, _SHIFT):
        k |= (e + _BIAS) << s
    return k


def key_units(key: int) -> tuple:
    return tuple(((key >> s) & _MASK) - _BIAS for s in _SHIFT)


def key_unit(key: int, i: int) -> int:
    return ((key >> _SHIFT[i]) & _MASK) - _BIAS


def unit_key(var: str, units: int) -> int:
    return ZERO_KEY + (units << _SHIFT[VAR_INDEX[var]])


def key_inverse(key: int) -> int:
    return 2 * ZERO_KEY - key


def _to_units(var: str, e) -> int:
    e = Fraction(e)
    u = e * LATTICE[var]
    if u.denominator != 1:
        raise LatticeViolation(f"exponent {e} of {var} is off its 1/{LATTICE[var]} lattice")
    return int(u)


class Monomial:
    """Sparse exponent map var -> rational exponent (zero exponents absent)."""

    __slots__ = ("key",)

    def __init__(self, exps: Mapping[str, object] | None = None, *, key: int | None = None):
        if key is not None:
            self.key = key
            return
        units = [0] * len(VARS)
        for v, e in (exps or {}).items():
            if v not in VAR_INDEX:
                raise ValueError(f"unknown variable {v!r}")
            units[VAR_INDEX[v]] = _to_units(v, e)
        self.key = key_from_units(units)

    @property
    def exps(self) -> dict:
        out = {}
        for v, u in zip(VARS, key_units(self.key)):
            if u:
                out[v] = Fraction(u, LATTICE[v])
        return out

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(key=self.key + other.key - ZERO_KEY)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Monomial({self.exps})"

    def __str__(self):
        return render_key(self.key) or "1"


def render_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def render_key(key: int) -> str:
    parts = []
    for v, u in zip(VARS, key_units(key)):
        if u == 0:
            continue
        e = Fraction(u, LATTICE[v])
        parts.append(v if e == 1 else f"{v}^{render_exponent(e)}")
    return "*".join(parts)


# --------------------------------------------------------------------------
# Laurent polynomials

def _clean(d: dict) -> dict:
    return {k: c for k, c in d.items() if c != 0}


class LaurentPoly:
    """Immutable sparse Laurent polynomial; terms map key -> nonzero coefficient."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping | None = None, *, _trusted: bool = False):
        if terms is None:
            terms = {}
        self._t = dict(terms) if _trusted else _clean(dict(terms))
        self._hash = None

    # constructors
    @staticmethod
    def const(c) -> "LaurentPoly":
        if isinstance(c, GaussRat):
            c = c.simplify()
        return LaurentPoly({ZERO_KEY: c}) if c != 0 else ZERO

    @staticmethod
    def var(name: str, exp=1, coeff=1) -> "LaurentPoly":
        return LaurentPoly({unit_key(name, _to_units(name, exp)): coeff})

    @staticmethod
    def monomial(exps: Mapping[str, object], coeff=1) -> "LaurentPoly":
        return LaurentPoly({Monomial(exps).key: coeff})

    @staticmethod
    def from_key(key: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({key: coeff})

    # basic queries
    @property
    def terms(self) -> dict:
        return self._t

    def items(self):
        return self._t.items()

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_const(self) -> bool:
        return not self._t or (len(self._t) == 1 and ZERO_KEY in self._t)

    def const_value(self):
        if not self._t:
            return 0
        if not self.is_const():
            raise ValueError("not a constant")
        return self._t[ZERO_KEY]

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def coeff(self, mono: Monomial | Mapping | int) -> GaussRat:
        if isinstance(mono, Monomial):
            k = mono.key
        elif isinstance(mono, int):
            k = mono
        else:
            k = Monomial(mono).key
        return GaussRat.of(self._t.get(k, 0))

    def variables(self) -> set:
        seen = set()
        for k in self._t:
            for v, u in zip(VARS, key_units(k)):
                if u:
                    seen.add(v)
        return seen

    def is_real(self) -> bool:
        return not any(isinstance(c, GaussRat) for c in self._t.values())

    # arithmetic
    def _coerce(self, o):
        if isinstance(o, LaurentPoly):
            return o
        if isinstance(o, (int, Fraction, GaussRat)):
            return LaurentPoly.const(o)
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return LaurentPoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._t.items()}, _trusted=True)

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction, GaussRat)):
            if o == 0:
                return ZERO
            return LaurentPoly({k: c * o for k, c in self._t.items()}, _trusted=True)
        if not isinstance(o, LaurentPoly):
            return NotImplemented
        a, b = self._t, o._t
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            off = kb - ZERO_KEY
            if cb == 1:
                return LaurentPoly({k + off: c for k, c in a.items()}, _trusted=True)
            return LaurentPoly({k + off: c * cb for k, c in a.items()}, _trusted=True)
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            off = kb - ZERO_KEY
            for ka, ca in a.items():
                k = ka + off
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly(_clean(out), _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise NotPolynomial("negative power of a non-monomial")
            (k, c), = self._t.items()
            return LaurentPoly({ZERO_KEY + n * (k - ZERO_KEY): coeff_pow(c, n)})
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction, GaussRat)):
            return LaurentPoly({k: coeff_div(c, o) for k, c in self._t.items()}, _trusted=True)
        if isinstance(o, LaurentPoly):
            return self.divide_exact(o)
        return NotImplemented

    def __eq__(self, o):
        if isinstance(o, LaurentPoly):
            return self._t == o._t
        if isinstance(o, (int, Fraction, GaussRat)):
            return self._t == LaurentPoly.const(o)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # monomial helpers
    def shift(self, key: int, coeff=1) -> "LaurentPoly":
        off = key - ZERO_KEY
        if coeff == 1:
            return LaurentPoly({k + off: c for k, c in self._t.items()}, _trusted=True)
        return LaurentPoly({k + off: c * coeff for k, c in self._t.items()}, _trusted=True)

    def min_units(self) -> tuple:
        if not self._t:
            raise ZeroPolynomial("zero polynomial has no lowest monomial")
        rows = [key_units(k) for k in self._t]
        return tuple(min(col) for col in zip(*rows))

    def max_units(self) -> tuple:
        if not self._t:
            raise ZeroPolynomial("zero polynomial has no highest monomial")
        rows = [key_units(k) for k in self._t]
        return tuple(max(col) for col in zip(*rows))

    def monomial_content(self) -> int:
        return key_from_units(self.min_units())

    def leading(self):
        k = max(self._t)
        return k, self._t[k]

    def trailing(self):
        k = min(self._t)
        return k, self._t[k]

    def degree(self, var: str) -> Fraction:
        i = VAR_INDEX[var]
        return Fraction(max(key_unit(k, i) for k in self._t), LATTICE[var])

    def low_degree(self, var: str) -> Fraction:
        i = VAR_INDEX[var]
        return Fraction(min(key_unit(k, i) for k in self._t), LATTICE[var])

    def by_var(self, var: str) -> dict:
        """Split into {units of var: coefficient polynomial free of var}."""
        i = VAR_INDEX[var]
        s = _SHIFT[i]
        out: dict = {}
        for k, c in self._t.items():
            u = ((k >> s) & _MASK) - _BIAS
            out.setdefault(u, {})[k - (u << s)] = c
        return {u: LaurentPoly(d, _trusted=True) for u, d in out.items()}

    def conjugate_coeffs(self) -> "LaurentPoly":
        return LaurentPoly({k: coeff_conj(c) for k, c in self._t.items()}, _trusted=True)

    # exact division
    def divide_exact(self, g: "LaurentPoly") -> "LaurentPoly":
        """Quotient self/g in the Laurent ring; NotDivisible if it does not exist."""
        if not g._t:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._t:
            return ZERO
        if len(g._t) == 1:
            (kg, cg), = g._t.items()
            off = ZERO_KEY - kg
            return LaurentPoly({k + off: coeff_div(c, cg) for k, c in self._t.items()},
                               _trusted=True)
        mg = g.monomial_content()
        mf = self.monomial_content()
        g0 = g.shift(key_inverse(mg))
        r = dict(self.shift(key_inverse(mf))._t)
        glead, gc = g0.leading()
        gl_units = key_units(glead)
        gterms = list(g0._t.items())
        quot: dict = {}
        # packed keys are order-compatible with addition, so every new
        # remainder term sits below the current leading one: a heap works
        heap = [-k for k in r]
        heapq.heapify(heap)
        while r:
            k = -heapq.heappop(heap)
            c = r.get(k)
            if c is None:
                continue
            diff = key_units(k)
            for a, b in zip(diff, gl_units):
                if a < b:
                    raise NotDivisible("inexact multivariate division")
            qk = k - glead + ZERO_KEY
            qc = coeff_div(c, gc)
            quot[qk] = qc
            off = qk - ZERO_KEY
            for kk, cc in gterms:
                t = kk + off
                old = r.get(t)
                if old is None:
                    r[t] = -qc * cc
                    heapq.heappush(heap, -t)
                    continue
                v = old - qc * cc
                if v == 0:
                    del r[t]
                else:
                    r[t] = v
        q = LaurentPoly(quot, _trusted=True)
        return q.shift(mf - mg + ZERO_KEY)

    def divides(self, f: "LaurentPoly") -> bool:
        try:
            f.divide_exact(self)
            return True
        except NotDivisible:
            return False

    # rendering
    def sorted_terms(self):
        return sorted(self._t.items())

    def to_text(self) -> str:
        if not self._t:
            return "0"
        out = []
        for k, c in self.sorted_terms():
            m = render_key(k)
            neg = False
            if isinstance(c, GaussRat):
                neg = c.re < 0 or (c.re == 0 and c.im < 0)
                cs = render_coeff(-c if neg and c.re * c.im >= 0 else c)
                neg = neg and c.re * c.im >= 0
            else:
                neg = c < 0
                cs = str(-c if neg else c)
            if m:
                body = m if cs == "1" else f"{cs}*{m}"
            else:
                body = cs
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    __str__ = to_text

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"

    def to_json_obj(self) -> list:
        recs = []
        for k, c in self.sorted_terms():
            g = GaussRat.of(c)
            exps = {}
            for v, u in zip(VARS, key_units(k)):
                if u:
                    e = Fraction(u, LATTICE[v])
                    exps[v] = f"{e.numerator}/{e.denominator}"
            recs.append({"coeff": {"re": str(g.re), "im": str(g.im)}, "exps": exps})
        return recs

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json_obj(recs) -> "LaurentPoly":
        terms: dict = {}
        for r in recs:
            c = GaussRat(Fraction(r["coeff"]["re"]), Fraction(r["coeff"]["im"])).simplify()
            k = Monomial({v: Fraction(e) for v, e in r["exps"].items()}).key
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly(terms)

    @staticmethod
    def from_json(s: str) -> "LaurentPoly":
        return LaurentPoly.from_json_obj(json.loads(s))


ZERO = LaurentPoly()
ONE = LaurentPoly({ZERO_KEY: 1}, _trusted=True)


def var(name: str, exp=1) -> LaurentPoly:
    return LaurentPoly.var(name, exp)


# --------------------------------------------------------------------------
# substitution, conjugation, normalization

def _map_keys(p: LaurentPoly, images: dict) -> LaurentPoly:
    """Apply per-variable images {index: (coeff, key-offset per lattice unit)}."""
    out: dict = {}
    for k, c in p.items():
        units = key_units(k)
        nk = ZERO_KEY
        nc = c
        keep = list(units)
        for i, (ic, ioff) in images.items():
            u = units[i]
            if u:
                keep[i] = 0
                nk += u * ioff
                if ic != 1:
                    nc = nc * coeff_pow(ic, u)
        nk += key_from_units(keep) - ZERO_KEY
        out[nk] = out.get(nk, 0) + nc
    return LaurentPoly(out)


def substitute(p: LaurentPoly, assignment: Mapping) -> LaurentPoly:
    """Ring homomorphism sending chosen variables to scaled monomials.

    ``assignment`` maps a variable name to ``(coeff, Monomial)`` or to
    ``(coeff, Monomial, source_exponent)``.  The pair is the image of
    ``var**source_exponent``; the default source exponent is the lattice
    generator ``1/den``.  Thus ``{"q": (1, Monomial({"q": "1/2"}))}`` is
    q^{1/4} -> q^{1/2}.  Images must land on the target lattices.
    """
    images = {}
    for v, img in assignment.items():
        if v not in VAR_INDEX:
            raise ValueError(f"unknown variable {v!r}")
        coeff, mono = img[0], img[1]
        src = Fraction(img[2]) if len(img) > 2 else Fraction(1, LATTICE[v])
        if isinstance(mono, Mapping):
            mono = Monomial(mono)
        step = Fraction(1, LATTICE[v]) / src
        if step.denominator != 1:
            # image of the lattice generator is a root of the given image
            img_units = key_units(mono.key)
            new_units = []
            for u in img_units:
                nu = u * step
                if nu.denominator != 1:
                    raise LatticeViolation(f"image of {v} leaves the target lattice")
                new_units.append(int(nu))
            if coeff != 1:
                raise LatticeViolation(f"cannot take a root of the coefficient for {v}")
            images[VAR_INDEX[v]] = (1, key_from_units(new_units) - ZERO_KEY)
        else:
            n = int(step)
            images[VAR_INDEX[v]] = (coeff_pow(GaussRat.of(coeff).simplify(), n),
                                    n * (mono.key - ZERO_KEY))
    if not images:
        return p
    return _map_keys(p, images)


def permute_vars(p: LaurentPoly, perm: Mapping[str, str]) -> LaurentPoly:
    """Rename variables (lattices must agree)."""
    images = {}
    for a, b in perm.items():
        if LATTICE[a] != LATTICE[b]:
            raise LatticeViolation(f"cannot rename {a} to {b}")
        images[VAR_INDEX[a]] = (1, unit_key(b, 1) - ZERO_KEY)
    return _map_keys(p, images)


def scale_var(p: LaurentPoly, name: str, factor: int) -> LaurentPoly:
    """Multiply every exponent of ``name`` by an integer factor."""
    return _map_keys(p, {VAR_INDEX[name]: (1, factor * (unit_key(name, 1) - ZERO_KEY))})


def negate_root(p: LaurentPoly, names: Iterable[str]) -> LaurentPoly:
    """Send the lattice generator of each name to minus itself."""
    idx = [VAR_INDEX[n] for n in names]
    out = {}
    for k, c in p.items():
        units = key_units(k)
        if sum(units[i] for i in idx) & 1:
            c = -c
        out[k] = c
    return LaurentPoly(out, _trusted=True)


def star_conjugate(p: LaurentPoly) -> LaurentPoly:
    """Invert every variable and conjugate I."""
    return LaurentPoly({key_inverse(k): coeff_conj(c) for k, c in p.items()}, _trusted=True)


def tilde_normalize(p: LaurentPoly, vars: Iterable[str] = ("q", "t")):
    """Divide by the componentwise lowest monomial in the listed variables."""
    if p.is_zero():
        raise ZeroPolynomial("cannot tilde-normalize zero")
    lows = p.min_units()
    units = [0] * len(VARS)
    for v in vars:
        units[VAR_INDEX[v]] = lows[VAR_INDEX[v]]
    key = key_from_units(units)
    return p.shift(key_inverse(key)), Monomial(key=key)


def evaluate_at_one(p: LaurentPoly, names: Iterable[str]) -> LaurentPoly:
    return substitute(p, {n: (1, Monomial()) for n in names})


# --------------------------------------------------------------------------
# multivariate gcd

def _content_over(parts: Iterable[LaurentPoly]) -> LaurentPoly:
    g = None
    for c in parts:
        g = c if g is None else _gcd_poly(g, c)
        if g.is_const():
            return ONE
    return g if g is not None else ZERO


def _prem(a: dict, b: dict) -> dict:
    """Pseudo-remainder of dense-in-x coefficient dicts {deg: poly}."""
    db = max(b)
    lc = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        c = r.pop(dr)
        r = {d: v * lc for d, v in r.items()}
        off = dr - db
        for d, v in b.items():
            if d == db:
                continue
            nd = d + off
            nv = r.get(nd, ZERO) - c * v
            if nv.is_zero():
                r.pop(nd, None)
            else:
                r[nd] = nv
    return r


def _strip(p: LaurentPoly) -> LaurentPoly:
    return p.shift(key_inverse(p.monomial_content()))


def _assemble(d: dict, var: str) -> LaurentPoly:
    out = ZERO
    for u, c in d.items():
        out = out + c.shift(unit_key(var, u))
    return out


def _gcd_poly(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """gcd of two polynomials with nonnegative exponents, up to a unit."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    f, g = _strip(f), _strip(g)
    if f.is_const() or g.is_const():
        return ONE
    vf, vg = f.variables(), g.variables()
    only_f = vf - vg
    if only_f:
        v = min(only_f, key=VAR_INDEX.get)
        return _gcd_poly(_content_over(f.by_var(v).values()), g)
    only_g = vg - vf
    if only_g:
        v = min(only_g, key=VAR_INDEX.get)
        return _gcd_poly(f, _content_over(g.by_var(v).values()))
    common = vf & vg
    x = min(common, key=lambda v: (max(f.degree(v), g.degree(v)), VAR_INDEX[v]))
    fd, gd = f.by_var(x), g.by_var(x)
    cf = _content_over(fd.values())
    cg = _content_over(gd.values())
    c = _gcd_poly(cf, cg)
    if not cf.is_const():
        fd = {d: v.divide_exact(cf) for d, v in fd.items()}
    if not cg.is_const():
        gd = {d: v.divide_exact(cg) for d, v in gd.items()}
    a, b = (fd, gd) if max(fd) >= max(gd) else (gd, fd)
    while True:
        r = _prem(a, b)
        if not r:
            break
        if max(r) == 0:
            return c
        cr = _content_over(r.values())
        if not cr.is_const():
            r = {d: v.divide_exact(cr) for d, v in r.items()}
        a, b = b, r
    return _strip(_assemble(b, x)) * c


def _normalize_unit(p: LaurentPoly) -> LaurentPoly:
    k, c = p.trailing()
    return p / c


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """gcd in the Laurent ring, monomial content removed, lex-least coefficient 1."""
    if f.is_zero() and g.is_zero():
        return ZERO
    h = _gcd_poly(_strip(f) if f else f, _strip(g) if g else g)
    return _normalize_unit(_strip(h))


# --------------------------------------------------------------------------
# rational functions

class RatFn:
    """Reduced fraction num/den of Laurent polynomials.

    den carries no monomial content and its lexicographically least
    term has coefficient 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly.const(num)
        if den is None:
            den = ONE
        den = den if isinstance(den, LaurentPoly) else LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFn with zero denominator")
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def of(x) -> "RatFn":
        if isinstance(x, RatFn):
            return x
        return RatFn(x)

    def __add__(self, o):
        o = _ratfn_coerce(o)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, reduced=True)

    def __sub__(self, o):
        o = _ratfn_coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = _ratfn_coerce(o)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _ratfn_coerce(o)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("RatFn division by zero")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return _ratfn_coerce(o) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFn(self.den ** (-n), self.num ** (-n))
        return RatFn(self.num ** n, self.den ** n, reduced=True)

    def __eq__(self, o):
        o = _ratfn_coerce(o)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def map(self, fn) -> "RatFn":
        """Apply a ring endomorphism of LaurentPoly to numerator and denominator."""
        return RatFn(fn(self.num), fn(self.den))

    def to_text(self) -> str:
        if self.den == ONE:
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self):
        return f"RatFn({self.to_text()})"


def _ratfn_coerce(o):
    if isinstance(o, RatFn):
        return o
    if isinstance(o, LaurentPoly):
        return RatFn(o, ONE, reduced=True)
    if isinstance(o, (int, Fraction, GaussRat)):
        return RatFn(LaurentPoly.const(o), ONE, reduced=True)
    return None


def _cyclotomic_in(y_key: int, d: int) -> LaurentPoly:
    """Phi_d(y) for the monomial y with the given key."""
    from .cyclotomic import cyclotomic_poly
    step = y_key - ZERO_KEY
    return LaurentPoly({ZERO_KEY + i * step: c for i, c in enumerate(cyclotomic_poly(d)) if c})


def split_binomial_factors(p: LaurentPoly):
    """Strip factors Phi_d(y), y a primitive monomial, from p.

    Candidates come from ratios of p's terms.  Returns ([(factor, mult)],
    rest); the factors are irreducible and pairwise non-associate, and rest
    has none of them left.  Denominators built from intertwiner scalars
    split completely, which lets RatFn skip the general gcd.
    """
    found = []
    tried = set()
    rest = p
    progress = True
    while progress and not rest.is_monomial():
        progress = False
        keys = sorted(rest.terms)
        base = key_units(keys[0])
        for k in keys[1:]:
            units = [a - b for a, b in zip(key_units(k), base)]
            g = 0
            for u in units:
                g = gcd(g, abs(u))
            y = [u // g for u in units]
            if next(u for u in y if u) < 0:
                y = [-u for u in y]
            yk = key_from_units(y)
            for d in range(1, 2 * g + 1):
                if (2 * g) % d or (yk, d) in tried:
                    continue
                tried.add((yk, d))
                f = _cyclotomic_in(yk, d)
                mult = 0
                while True:
                    try:
                        rest = rest.divide_exact(f)
                    except NotDivisible:
                        break
                    mult += 1
                if mult:
                    found.append((f, mult))
                    progress = True
            if progress:
                break
    return found, rest


def _reduce(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return ZERO, ONE
    if not den.is_monomial():
        try:
            return _finish(num.divide_exact(den), ONE)
        except NotDivisible:
            pass
        factors, rest = split_binomial_factors(den)
        for f, mult in factors:
            for _ in range(mult):
                try:
                    num = num.divide_exact(f)
                except NotDivisible:
                    break
                den = den.divide_exact(f)
        if not rest.is_monomial():
            g = poly_gcd(num, rest)
            if not g.is_const():
                num = num.divide_exact(g)
                den = den.divide_exact(g)
    return _finish(num, den)


def _finish(num: LaurentPoly, den: LaurentPoly):
    m = den.monomial_content()
    den = den.shift(key_inverse(m))
    num = num.shift(key_inverse(m))
    _, c = den.trailing()
    if c != 1:
        den = den / c
        num = num / c
    return num, den


def ratfn_to_polynomial(r: RatFn) -> LaurentPoly:
    if not r.den.is_monomial():
        raise NotPolynomial(f"denominator {r.den} is not a unit")
    return r.num.divide_exact(r.den)


# --------------------------------------------------------------------------
# parsing of the canonical text format (plus a little more)

class _Parser:
    def __init__(self, text: str, env: Mapping | None = None):
        self.toks = self._lex(text)
        self.i = 0
        self.env = {}
        for k, v in (env or {}).items():
            # string values are parsed in the environment built so far
            self.env[k] = parse_poly(v, self.env) if isinstance(v, str) else v

    @staticmethod
    def _lex(text: str):
        toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                toks.append(("num", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                toks.append(("id", text[i:j]))
                i = j
            elif ch in "+-*/^()":
                toks.append(("op", ch))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}")
        return toks

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ParseError(f"expected {val or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> LaurentPoly:
        p = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return p

    def expr(self):
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        elif self.peek() == ("op", "+"):
            self.take()
        p = self.term()
        if neg:
            p = -p
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self):
        p = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                p = p * self.unary()
            elif tok == ("op", "/"):
                self.take()
                p = p / self.unary()
            elif tok[0] in ("num", "id") or tok == ("op", "("):
                p = p * self.unary()
            else:
                return p

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        return self.power()

    def exponent(self) -> Fraction:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        if self.peek() == ("op", "("):
            self.take()
            s2 = 1
            if self.peek() == ("op", "-"):
                self.take()
                s2 = -1
            n = self.take("num")[1]
            d = 1
            if self.peek() == ("op", "/"):
                self.take()
                d = self.take("num")[1]
            self.take("op", ")")
            return sign * s2 * Fraction(n, d)
        return sign * Fraction(self.take("num")[1])

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            e = self.exponent()
            return _poly_power(base, e)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return LaurentPoly.const(val)
        if kind == "id":
            self.take()
            if val == "I":
                return LaurentPoly.const(I_UNIT)
            if val in self.env:
                return self.env[val]
            if val in VAR_INDEX:
                return var(val)
            raise ParseError(f"unknown symbol {val!r}")
        if (kind, val) == ("op", "("):
            self.take()
            p = self.expr()
            self.take("op", ")")
            return p
        raise ParseError(f"unexpected token {val!r}")


def _poly_power(base: LaurentPoly, e: Fraction) -> LaurentPoly:
    if e.denominator == 1:
        return base ** int(e)
    if not base.is_monomial():
        raise ParseError("fractional power of a non-monomial")
    (k, c), = base.items()
    if c != 1:
        raise ParseError("fractional power needs coefficient 1")
    units = []
    for v, u in zip(VARS, key_units(k)):
        nu = u * e
        if nu.denominator != 1:
            raise LatticeViolation(f"fractional power leaves the lattice of {v}")
        units.append(int(nu))
    return LaurentPoly.from_key(key_from_units(units))


def parse_poly(text: str, env: Mapping | None = None) -> LaurentPoly:
    return _Parser(text, env).parse()
