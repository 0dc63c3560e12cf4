"""Exact arithmetic in Q(zeta_n) and a polyrep context over it.

Elements are coefficient tuples modulo the cyclotomic polynomial Phi_n,
in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .symalg import VARS, LaurentPoly, SymalgError, key_units


class CycloError(SymalgError):
    pass


# --------------------------------------------------------------------------
# dense polynomials over Q as lists, lowest degree first

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pdivmod(a: list, b: list) -> tuple:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _pdivmod(p, list(cyclotomic_poly(d)))
            assert not r
    return tuple(int(c) for c in p)


class CycloField:
    def __init__(self, n: int):
        if n < 2:
            raise CycloError("order must be at least 2")
        self.n = n
        self.modulus = cyclotomic_poly(n)
        self.degree = len(self.modulus) - 1
        self._pow = [self._reduce([0] * k + [1]) for k in range(n)]
        self._root_index = {c: k for k, c in enumerate(self._pow)}
        self.zero = Cyclo(self, (0,) * self.degree)
        self.one = self.const(1)

    def __repr__(self):
        return f"Q(zeta_{self.n})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.n == self.n

    def __hash__(self):
        return hash(("cyclo", self.n))

    def _reduce(self, p: list) -> tuple:
        p = list(p)
        d = self.degree
        m = self.modulus
        for top in range(len(p) - 1, d - 1, -1):
            c = p[top]
            if c:
                # Phi is monic: zeta^top = -sum m_i zeta^{top-d+i}
                for i in range(d):
                    p[top - d + i] -= c * m[i]
                p[top] = 0
        p = p[:d] + [0] * max(0, d - len(p))
        return tuple(p)

    def const(self, c) -> "Cyclo":
        return Cyclo(self, (c,) + (0,) * (self.degree - 1))

    def zeta(self, k: int = 1) -> "Cyclo":
        return Cyclo(self, self._pow[k % self.n])

    def __call__(self, x) -> "Cyclo":
        if isinstance(x, Cyclo):
            if x.field != self:
                raise CycloError("elements of different fields")
            return x
        return self.const(x)


class Cyclo:
    __slots__ = ("field", "c")

    def __init__(self, field: CycloField, coeffs: tuple):
        self.field = field
        self.c = coeffs

    def _lift(self, o):
        if isinstance(o, Cyclo):
            return o
        if isinstance(o, (int, Fraction)):
            return self.field.const(o)
        return NotImplemented

    def __add__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return Cyclo(self.field, tuple(x + y for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.field, tuple(-x for x in self.c))

    def __sub__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Cyclo(self.field, tuple(x * o for x in self.c))
        if not isinstance(o, Cyclo):
            return NotImplemented
        return Cyclo(self.field, self.field._reduce(_pmul(list(self.c), list(o.c))))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        k = self.field._root_index.get(self.c)
        if k is not None:
            return self.field.zeta(-k)
        # extended Euclid: s*self = 1 mod Phi
        r0, r1 = list(self.field.modulus), _trim(list(self.c))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        inv = Fraction(1) / r1[0]
        return Cyclo(self.field, tuple(_int_if(Fraction(x)) for x in
                                       self.field._reduce([x * inv for x in s1])))

    def __truediv__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.c)

    def __eq__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return False
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        terms = [f"{x}*z^{i}" if i else str(x) for i, x in enumerate(self.c) if x]
        return " + ".join(terms) or "0"


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


# --------------------------------------------------------------------------

class CycloContext:
    """Parameter images for polyrep at q^{1/4} = zeta_{4N}.

    u_i^{1/2} = q^{k_i/2} = zeta^{2k_i}, v_i^{1/2} = zeta^{2l_i}; all of
    2k_i, 2l_i must be integers.
    """

    kind = "CC1"

    def __init__(self, N: int, k1, k0, l1, l0):
        self.N = N
        self.field = F = CycloField(4 * N)
        self.exponents = {}
        for name, e in (("u1", k1), ("u0", k0), ("v1", l1), ("v0", l0)):
            e = Fraction(e)
            if (2 * e).denominator != 1:
                raise CycloError(f"{name} exponent {e} is not a half-integer")
            self.exponents[name] = int(2 * e)
        self.q4 = F.zeta(1)
        self.hu1 = F.zeta(self.exponents["u1"])
        self.hu0 = F.zeta(self.exponents["u0"])
        self.hv1 = F.zeta(self.exponents["v1"])
        self.hv0 = F.zeta(self.exponents["v0"])
        self.a0 = self.hu0 - self.hu0 ** -1
        self.a1 = self.hu1 - self.hu1 ** -1
        self.b0 = self.hv0 - self.hv0 ** -1
        self.b1 = self.hv1 - self.hv1 ** -1
        self.one = F.one
        self.zero = F.zero

    def q4pow(self, k: int) -> Cyclo:
        return self.field.zeta(k)

    def pt_pow(self, k: int) -> Cyclo:
        return (self.hu1 * self.hv1) ** (-k)

    def specialize(self, p: LaurentPoly) -> Cyclo:
        """Image of a LaurentPoly in q, u_i, v_i (real rational coefficients)."""
        step = {"q": 1, "u1": self.exponents["u1"], "u0": self.exponents["u0"],
                "v1": self.exponents["v1"], "v0": self.exponents["v0"]}
        out = self.zero
        for k, c in p.items():
            units = key_units(k)
            e = 0
            for v, u in zip(VARS, units):
                if not u:
                    continue
                if v not in step:
                    raise CycloError(f"variable {v} has no image at the root")
                # q has lattice 1/4 -> zeta; the others 1/2 -> zeta^{2k}
                e += u * step[v]
            if not isinstance(c, (int, Fraction)):
                if getattr(c, "im", 0):
                    raise CycloError("imaginary coefficient")
                c = c.re
            out = out + self.field.zeta(e) * c
        return out


class CycloSeries:
    """Truncated power series in eps over Q(zeta), modulo eps^K.

    Deforming a parameter h to h(1 + eps)^p and reading off the lowest
    nonvanishing order gives limits at eps = 0 without ever leaving the
    field.
    """

    __slots__ = ("field", "c")

    def __init__(self, field: CycloField, coeffs):
        self.field = field
        self.c = tuple(coeffs)

    @staticmethod
    def unit_power(field: CycloField, p: int, K: int) -> "CycloSeries":
        """(1 + eps)^p mod eps^K, any integer p."""
        coeffs, binom = [], Fraction(1)
        for j in range(K):
            coeffs.append(field.const(_int_if(binom)))
            binom = binom * (p - j) / (j + 1)
        return CycloSeries(field, coeffs)

    def _lift(self, o):
        if isinstance(o, CycloSeries):
            return o
        if isinstance(o, (Cyclo, int, Fraction)):
            z = self.field.zero
            return CycloSeries(self.field, (self.field(o),) + (z,) * (len(self.c) - 1))
        return NotImplemented

    def __add__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return CycloSeries(self.field, [x + y for x, y in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycloSeries(self.field, [-x for x in self.c])

    def __sub__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (Cyclo, int, Fraction)):
            return CycloSeries(self.field, [x * o for x in self.c])
        if not isinstance(o, CycloSeries):
            return NotImplemented
        K = len(self.c)
        out = [self.field.zero] * K
        for i, x in enumerate(self.c):
            if x:
                for j in range(K - i):
                    if o.c[j]:
                        out[i + j] = out[i + j] + x * o.c[j]
        return CycloSeries(self.field, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloSeries":
        if not self.c[0]:
            raise ZeroDivisionError("series with zero constant term")
        K = len(self.c)
        inv0 = self.c[0].inverse()
        out = [inv0]
        for n in range(1, K):
            acc = self.field.zero
            for j in range(1, n + 1):
                acc = acc + self.c[j] * out[n - j]
            out.append(-acc * inv0)
        return CycloSeries(self.field, out)

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = self._lift(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __bool__(self):
        return any(self.c)

    def __eq__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return False
        return self.c == o.c

    __hash__ = None

    def order(self):
        """Index of the first nonzero coefficient; None if zero mod eps^K."""
        for i, x in enumerate(self.c):
            if x:
                return i
        return None


def _int_if(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def deformed_context(ctx: "CycloContext", powers: dict, K: int = 3) -> "CycloContext":
    """A copy of ctx with h_name replaced by h_name (1 + eps)^power."""
    out = CycloContext.__new__(CycloContext)
    out.__dict__.update({k: v for k, v in ctx.__dict__.items() if not k.startswith("_")})
    F = ctx.field
    for attr in ("hu0", "hu1", "hv0", "hv1"):
        base = CycloSeries.unit_power(F, powers.get(attr[1:], 0), K)
        setattr(out, attr, base * getattr(ctx, attr))
    out.a0 = out.hu0 - out.hu0 ** -1
    out.a1 = out.hu1 - out.hu1 ** -1
    out.b0 = out.hv0 - out.hv0 ** -1
    out.b1 = out.hv1 - out.hv1 ** -1
    lift = CycloSeries(F, (F.one,) + (F.zero,) * (K - 1))
    out.one = lift
    out.zero = lift * 0
    out.q4pow = lambda k: lift * F.zeta(k)
    return out
