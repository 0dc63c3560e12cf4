"""Perfect C^vC_1 modules at roots of unity: the radical-generator checks.

Parameters are u_i = q^{k_i}, v_i = q^{l_i} with q^{1/4} a primitive
(4N)-th root of unity and M = N - 2k_1.  The claims checked are that
{E_{-M}} = 0 while {E_m} != 0 for -M < m <= M.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .cyclotomic import Cyclo, CycloContext, deformed_context
from .polyrep import e_tilde, eigenvalue, intertwiner_scalar, op_Y, xp_scale
from .symalg import SymalgError

HALF = Fraction(1, 2)


class InadmissibleParams(SymalgError):
    pass


class RecurrenceSingular(SymalgError):
    def __init__(self, n: int, msg: str = ""):
        super().__init__(msg or f"intertwiner scalar vanishes on the way to E_{n}")
        self.n = n


def _half(x) -> Fraction:
    x = Fraction(x)
    if (2 * x).denominator != 1:
        raise InadmissibleParams(f"{x} is not a half-integer")
    return x


@dataclass(frozen=True)
class VerlindeParams:
    N: int
    k1: Fraction
    k0: Fraction
    l1: Fraction = Fraction(0)
    l0: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("k1", "k0", "l1", "l0"):
            object.__setattr__(self, name, _half(getattr(self, name)))

    @property
    def M(self) -> int:
        return int(self.N - 2 * self.k1)

    def context(self) -> CycloContext:
        return CycloContext(self.N, self.k1, self.k0, self.l1, self.l0)

    def label(self) -> str:
        return f"N={self.N} k1={self.k1} k0={self.k0} l1={self.l1} l0={self.l0}"

    def validate(self) -> "VerlindeParams":
        if self.N < 2:
            raise InadmissibleParams("N must be at least 2")
        if not 0 < self.k1 < Fraction(self.N, 2):
            raise InadmissibleParams(f"need 0 < k1 < N/2, got k1 = {self.k1}")
        if not 0 <= self.k0 <= self.k1:
            raise InadmissibleParams(f"need 0 <= k0 <= k1, got k0 = {self.k0}")
        if not nondegenerate(self):
            raise InadmissibleParams("the nondegeneracy condition fails")
        return self


def nondegenerate(p: VerlindeParams) -> bool:
    """1 - e q^{j/2 + 1/4} (u1 u0 v1 v0^e)^{1/2} != 0 for e = +-1, 0 <= j <= M."""
    F = p.context().field
    for eps in (1, -1):
        half = 2 * (p.k1 + p.k0 + p.l1 + eps * p.l0)   # exponent of zeta
        for j in range(p.M + 1):
            if F.one - F.zeta(int(2 * j + 1 + half)) * eps == 0:
                return False
    return True


def sufficient_criterion(p: VerlindeParams) -> bool:
    """1/2 + k1 + k0 + l1 + l0 is not an integer."""
    return (HALF + p.k1 + p.k0 + p.l1 + p.l0).denominator != 1


def _path(n: int) -> list:
    """Recurrence indices 1, -1, 2, -2, ... ending at n."""
    seq, k = [], 0
    while k != n:
        k = -k + 1 if k <= 0 else -k
        seq.append(k)
    return seq


def _singular_step(ctx, n: int):
    for k in _path(n):
        if not intertwiner_scalar(ctx, k):
            return k
    return None


@dataclass
class RootPolynomial:
    """E_n at the root: X-exponent -> field element, X^n coefficient 1."""
    n: int
    coeffs: dict
    eigenvalue: Cyclo
    method: str = "recurrence"

    def evaluate(self, ctx: CycloContext) -> Cyclo:
        total = ctx.zero
        for k, c in self.coeffs.items():
            total = total + c * ctx.pt_pow(k)
        return total


def specialize_E_at_root(params: VerlindeParams, n: int, certify: bool = True) -> RootPolynomial:
    """Run the intertwiner recurrence in Q(zeta_{4N}) and normalize."""
    ctx = _context(params)
    bad = _singular_step(ctx, n)
    if bad is not None:
        raise RecurrenceSingular(n, f"scalar for step {bad} vanishes (target E_{n})")
    et = e_tilde(ctx, n)
    inv = et[n].inverse()
    coeffs = {k: c * inv for k, c in et.items()}
    lam = eigenvalue(ctx, n)
    if certify and op_Y(ctx, coeffs) != xp_scale(coeffs, lam):
        raise SymalgError(f"E_{n} fails the Y-eigenvalue equation at the root")
    return RootPolynomial(n, coeffs, lam)


_CONTEXTS: dict = {}


def _context(params: VerlindeParams) -> CycloContext:
    ctx = _CONTEXTS.get(params)
    if ctx is None:
        ctx = _CONTEXTS[params] = params.context()
    return ctx


# deformations of the free parameters used for the boundary polynomial
DEFORMATIONS = ({"u0": 1}, {"u0": 1, "v0": 2}, {"u0": 2, "v1": 1, "v0": -3}, {"u0": -1, "v1": 5})


def boundary_limit(params: VerlindeParams, powers: dict, K: int = 3) -> RootPolynomial:
    """E_{-M} as the eps -> 0 limit after h -> h(1 + eps)^power for u0, v0, v1.

    Used when the last intertwiner scalar vanishes (k0 = k1).  u1 is never
    deformed: it fixes M.  A coefficient vanishing to lower order than the
    leading one is a pole and raises RecurrenceSingular.
    """
    if "u1" in powers:
        raise ValueError("u1 determines M and is not a free parameter")
    n = -params.M
    while True:
        ctx = deformed_context(_context(params), powers, K)
        et = e_tilde(ctx, n)
        lc = et.get(n)
        order = lc.order() if lc is not None else None
        if order is not None:
            break
        if K > 8:
            raise RecurrenceSingular(n, "leading coefficient vanishes to high order")
        K *= 2
    coeffs = {}
    inv = lc.c[order].inverse()
    for k, c in et.items():
        o = c.order()
        if o is not None and o < order:
            raise RecurrenceSingular(n, f"E_{n} has a pole at the point")
        if c.c[order]:
            coeffs[k] = c.c[order] * inv
    return RootPolynomial(n, coeffs, eigenvalue(_context(params), n), method="limit")


@dataclass
class VerlindeReport:
    params: VerlindeParams
    M: int
    dimension: int
    boundary_zero: bool
    boundary_method: str
    nonzero: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.boundary_zero and all(self.nonzero.values())

    def lines(self) -> list:
        p = self.params
        out = [f"{p.label()}  M={self.M}  dim={self.dimension}",
               f"  {{E_{-self.M}}} = 0: {self.boundary_zero} ({self.boundary_method})"]
        bad = [m for m, v in self.nonzero.items() if not v]
        out.append(f"  {{E_m}} != 0 for {-self.M} < m <= {self.M}: "
                   f"{not bad}" + (f" (vanishing at m = {bad})" if bad else ""))
        out.extend(f"  note: {n}" for n in self.notes)
        out.append("  PASS" if self.ok else "  FAIL")
        return out


def check_radical_generator(params: VerlindeParams) -> VerlindeReport:
    params.validate()
    ctx = _context(params)
    M = params.M
    notes = []
    try:
        boundary = specialize_E_at_root(params, -M)
        zero = not boundary.evaluate(ctx)
        method = "recurrence"
    except RecurrenceSingular:
        # only the final step can vanish here; take the limit in u0, v0, v1
        limits = [boundary_limit(params, d) for d in DEFORMATIONS]
        same = all(lim.coeffs == limits[0].coeffs for lim in limits)
        zero = same and all(not lim.evaluate(ctx) for lim in limits)
        method = "limit"
        notes.append(f"last intertwiner scalar vanishes; limit taken along "
                     f"{len(DEFORMATIONS)} deformations, independent: {same}")
    nonzero = {}
    for m in range(-M + 1, M + 1):
        nonzero[m] = bool(specialize_E_at_root(params, m).evaluate(ctx))
    return VerlindeReport(params, M, 2 * M, zero, method, nonzero, notes)


def half_grid(lo, hi) -> list:
    """Half-integers in [lo, hi]."""
    a, b = int(2 * Fraction(lo)), int(2 * Fraction(hi))
    return [Fraction(i, 2) for i in range(a, b + 1)]


L_GRID = (Fraction(0), HALF, Fraction(1))


def search_tuples(max_N: int = 8, l_grid: Iterable = L_GRID, min_N: int = 2) -> list:
    """All admissible (N, k1, k0, l1, l0) with l_i from the grid."""
    out = []
    l_grid = list(l_grid)
    for N in range(min_N, max_N + 1):
        for k1 in half_grid(HALF, Fraction(N, 2) - HALF):
            for k0 in half_grid(0, k1):
                for l1 in l_grid:
                    for l0 in l_grid:
                        p = VerlindeParams(N, k1, k0, l1, l0)
                        try:
                            p.validate()
                        except InadmissibleParams:
                            continue
                        out.append(p)
    return out


# --------------------------------------------------------------------------
# the k1 - k0 < l1 + l0 regime

def regime_iii(p: VerlindeParams):
    """M' when the tuple is in the second regime, otherwise None."""
    if sufficient_criterion(p):
        return None
    if not p.k1 - p.k0 < p.l1 + p.l0:
        return None
    m2 = p.N + HALF - (p.k1 + p.k0 + p.l1 + p.l0)
    return int(m2) if m2 > 0 else None


def check_regime_iii(p: VerlindeParams) -> bool:
    """{E_{M'}} = 0 and {E_m} != 0 for the 2M' - 1 indices -M' < m < M'."""
    m2 = regime_iii(p)
    if m2 is None:
        raise InadmissibleParams("tuple is not in the second regime")
    ctx = _context(p)
    if specialize_E_at_root(p, m2).evaluate(ctx):
        return False
    return all(specialize_E_at_root(p, m).evaluate(ctx) for m in range(-m2 + 1, m2))
