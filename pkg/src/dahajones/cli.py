"""Command line interface: ``dahajones <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 a result could not be
certified (not a Laurent polynomial, failed eigenvalue check), 3 invalid
knot or parameters, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .symalg import GaussRat, LaurentPoly, Monomial, RatFn, SymalgError, parse_poly, substitute

EXIT_OK, EXIT_FAIL, EXIT_CERT, EXIT_INPUT, EXIT_USAGE = 0, 1, 2, 3, 64
JSON_FORMAT = 1


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --------------------------------------------------------------------------
# rendering

def _poly_json(x):
    if isinstance(x, RatFn):
        return {"num": x.num.to_json_obj(), "den": x.den.to_json_obj()}
    return x.to_json_obj()


def _text(x) -> str:
    return x.to_text()


def _emit(args, text_lines, obj):
    if args.format == "json":
        obj = {"format": JSON_FORMAT, **obj}
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print("\n".join(text_lines))


# --------------------------------------------------------------------------
# parameter specializations

CC1_NAMES = {"q": "q4", "u0": "u0", "u1": "u1", "v0": "v0", "v1": "v1"}
A1_NAMES = ("q", "t")
_ROOT = {"q": 4, "t": 2, "u0": 2, "u1": 2, "v0": 2, "v1": 2}


def parse_settings(text: str | None, allowed) -> dict:
    """'u1=t,u0=-q^(1/2)' -> {name: (coeff, Monomial)} for the lattice generator.

    The right-hand side must be a signed monomial.  The image of the
    generator (q^{1/4}, or the square root of the others) is the
    corresponding root; a minus sign becomes iota under a square root.
    """
    out: dict = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise InputError(f"expected name=value in {item!r}")
        name, value = (s.strip() for s in item.split("=", 1))
        if name not in allowed:
            raise InputError(f"cannot specialize {name!r}; choose from {', '.join(allowed)}")
        try:
            img = parse_poly(value)
        except SymalgError as e:
            raise InputError(f"cannot parse {value!r}: {e}") from None
        if not img.is_monomial():
            raise InputError(f"{name} = {value} is not a signed monomial")
        (key, c), = img.terms.items()
        root = _ROOT[name]
        exps = {v: Fraction(e) / root for v, e in Monomial(key=key).exps.items()}
        g = GaussRat.of(c)
        if g == 1:
            coeff = 1
        elif g == -1 and root == 2:
            coeff = GaussRat(0, 1)
        else:
            raise InputError(f"coefficient of {name} = {value} has no canonical root")
        try:
            Monomial(exps)
        except SymalgError:
            raise InputError(f"{name} = {value} leaves the exponent lattice") from None
        out[name] = (coeff, Monomial(exps))
    return out


def _params_for(settings: dict):
    from .engine import Params
    base = Params.symbolic()
    imgs = {}
    for name, (c, mono) in settings.items():
        imgs[CC1_NAMES[name]] = LaurentPoly.from_key(mono.key, c)
    return base.replace(**imgs) if imgs else None


# --------------------------------------------------------------------------
# commands

def cmd_awpoly(args) -> int:
    from .polyrep import e_polynomial, p_polynomial
    kind = args.algebra.upper()
    if args.symmetric:
        if args.n < 0:
            raise InputError("P_n needs n >= 0")
        poly = p_polynomial(kind, args.n)
        label = f"P_{args.n}"
    else:
        poly = e_polynomial(kind, args.n)
        label = f"E_{args.n}"
    body = poly.body
    lines = [f"{label} ({kind})"]
    lines += [f"  X^{k}: {_text(c)}" for k, c in sorted(body.items())]
    lines.append(f"eigenvalue: {_text(poly.eigenvalue)}")
    obj = {"command": "awpoly", "algebra": kind, "index": args.n, "symmetric": args.symmetric,
           "coefficients": [{"X": k, "value": _poly_json(c)} for k, c in sorted(body.items())],
           "eigenvalue": _poly_json(poly.eigenvalue)}
    _emit(args, lines, obj)
    return EXIT_OK


def compute_jones(algebra: str, r: int, s: int, m: int, tilde: bool = False,
                  settings: dict | None = None) -> LaurentPoly:
    """JD with optional parameter specializations (see parse_settings)."""
    from . import knots as K
    from .engine import UnsupportedParameterAction
    from .symalg import tilde_normalize
    settings = settings or {}
    if m < 0:
        raise InputError("the color m must be nonnegative")
    if algebra == "A1":
        out = K.jd_a1(r, s, m, tilde=tilde)
        return substitute(out, settings) if settings else out
    params = _params_for(settings)
    if params is None:
        out = K.jd_cc1(r, s, m)
    else:
        try:
            out = K.jd_cc1(r, s, m, params)
        except UnsupportedParameterAction:
            # the specialized ring cannot follow the lift; specialize afterwards
            out = substitute(K.jd_cc1(r, s, m), settings)
    if tilde:
        out = tilde_normalize(out, ("q", "t"))[0]
    return out


def cmd_jones(args) -> int:
    kind = args.algebra.upper()
    allowed = A1_NAMES if kind == "A1" else tuple(CC1_NAMES)
    settings = parse_settings(args.set, allowed)
    p = compute_jones(kind, args.r, args.s, args.m, args.tilde, settings)
    obj = {"command": "jones", "algebra": kind, "r": args.r, "s": args.s, "m": args.m,
           "tilde": args.tilde, "set": args.set or "", "polynomial": p.to_json_obj()}
    _emit(args, [p.to_text()], obj)
    return EXIT_OK


def cmd_super(args) -> int:
    from .superpoly import at_a, super_trefoil, super_via_daha
    if args.p < 1 or args.m < 1:
        raise InputError("need p >= 1 and m >= 1")
    if args.method == "formula":
        if args.p != 1:
            raise InputError("the closed formula covers p = 1 (the trefoil) only")
        h = super_trefoil(args.m).certify()
    else:
        h = super_via_daha(args.p, args.m)
    body = h.body
    if args.at:
        name, _, value = args.at.partition("=")
        if name.strip() != "a" or not value.strip():
            raise InputError("--at expects a=<expression>")
        try:
            body = at_a(body, parse_poly(value))
        except SymalgError as e:
            raise InputError(f"cannot use {value!r}: {e}") from None
    obj = {"command": "super", "p": args.p, "m": args.m, "method": args.method,
           "at": args.at or "", "polynomial": body.to_json_obj()}
    _emit(args, [body.to_text()], obj)
    return EXIT_OK


def cmd_verlinde(args) -> int:
    from .verlinde import VerlindeParams, check_radical_generator, search_tuples
    if args.search:
        tuples = search_tuples(args.max_N)
        reports = [check_radical_generator(p) for p in tuples]
    else:
        if args.N is None or args.k1 is None:
            raise UsageError("give --N and --k1 (and optionally --k0, --l1, --l0), or --search")
        try:
            p = VerlindeParams(args.N, Fraction(args.k1), Fraction(args.k0),
                               Fraction(args.l1), Fraction(args.l0))
        except ValueError as e:
            raise InputError(str(e)) from None
        reports = [check_radical_generator(p)]
    lines = []
    for rep in reports:
        lines.extend(rep.lines())
    failed = sum(not r.ok for r in reports)
    if args.search:
        lines.append(f"{len(reports)} tuples, {failed} failures")
    obj = {"command": "verlinde", "tuples": [
        {"N": r.params.N, "k1": str(r.params.k1), "k0": str(r.params.k0),
         "l1": str(r.params.l1), "l0": str(r.params.l0), "M": r.M,
         "boundary_zero": r.boundary_zero, "boundary_method": r.boundary_method,
         "nonzero": all(r.nonzero.values()), "ok": r.ok} for r in reports],
        "failures": failed}
    _emit(args, lines, obj)
    return EXIT_FAIL if failed or not reports else EXIT_OK


def cmd_verify(args) -> int:
    from .checks import run_suite
    results = run_suite(args.suite, quick=not args.full)
    failed = [r for r in results if not r.ok]
    lines = [r.line() for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    obj = {"command": "verify", "suite": args.suite,
           "results": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
           "failures": len(failed)}
    _emit(args, lines, obj)
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dahajones", description="Exact rank-one DAHA computations.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("awpoly", help="nonsymmetric or symmetric Askey-Wilson polynomial")
    p.add_argument("--algebra", choices=("a1", "cc1"), default="cc1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--symmetric", action="store_true", help="P_n instead of E_n")
    fmt(p)
    p.set_defaults(func=cmd_awpoly)

    p = sub.add_parser("jones", help="DAHA-Jones polynomial of the torus knot T(r, s)")
    p.add_argument("--algebra", choices=("a1", "cc1"), required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tilde", action="store_true")
    p.add_argument("--set", metavar="NAME=MONOMIAL,...",
                   help="specialize parameters, e.g. u1=t,u0=1,v0=1,v1=1")
    fmt(p)
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("super", help="superpolynomial of T(2p+1, 2) colored by m")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("daha", "formula"), default="daha")
    p.add_argument("--at", metavar="a=EXPR")
    fmt(p)
    p.set_defaults(func=cmd_super)

    p = sub.add_parser("verlinde", help="radical-generator check at a root of unity")
    p.add_argument("--N", type=int)
    p.add_argument("--k1")
    p.add_argument("--k0", default="0")
    p.add_argument("--l1", default="0")
    p.add_argument("--l0", default="0")
    p.add_argument("--search", action="store_true")
    p.add_argument("--max-N", dest="max_N", type=int, default=8)
    fmt(p)
    p.set_defaults(func=cmd_verlinde)

    p = sub.add_parser("verify", help="run a suite of exact checks")
    p.add_argument("--suite", choices=("fixtures", "symmetries", "reductions", "all"),
                   default="all")
    p.add_argument("--full", action="store_true", help="the whole symmetry knot set, m <= 3")
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    from .knots import InvalidKnot
    from .polyrep import CertificationError, SymmetrizationDegenerate
    from .superpoly import InvariantViolation, ResidualImaginary
    from .symalg import NotPolynomial
    from .verlinde import InadmissibleParams

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"dahajones: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, InvalidKnot, InadmissibleParams) as e:
        print(f"dahajones: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (NotPolynomial, CertificationError, SymmetrizationDegenerate,
            InvariantViolation, ResidualImaginary) as e:
        print(f"dahajones: not certified: {e}", file=sys.stderr)
        return EXIT_CERT


if __name__ == "__main__":
    sys.exit(main())
