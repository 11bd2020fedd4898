"""Command-line driver: normal forms, structure maps, R-matrices and suites."""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Presentation, get_algebra
from .errors import (
    CoidealCheckFailed,
    DivisionByZero,
    ExpressionSyntaxError,
    InvalidSpec,
    MixedPresentation,
    NotInvertible,
    UnknownSuite,
)
from .parser import parse, parse_element, tokenize
from .printing import format_value
from .report import Report

# -- suites ---------------------------------------------------------------------------


def _presentations(config, default):
    p = config.get("presentation")
    return [Presentation.parse(p)] if p else list(default)


def _kinds(config, default=("uqsl2", "hopf", "vnhopf", "pierce")):
    k = config.get("kind")
    return [k] if k else list(default)


def _combine(name, reports, config):
    if len(reports) == 1:
        r = reports[0]
        r.suite = name
        r.params = dict(r.params, **{k: v for k, v in config.items() if v is not None and k not in r.params})
        return r
    out = Report(name, config.get("presentation"), {k: v for k, v in config.items() if v is not None})
    for r in reports:
        label = r.presentation or r.suite
        extra = r.params.get("kind")
        prefix = f"{label}/{extra}: " if extra else f"{label}: "
        out.extend(r, prefix=prefix)
    return out


def _suite_confluence(config):
    from .rewriting import check_confluence

    length = config.get("degree") or 6
    return [check_confluence(p, length) for p in _presentations(config, Presentation)]


def _suite_equivalence(config):
    from .presentations import check_presentation_equivalence

    return [check_presentation_equivalence(_presentations(config, (Presentation.NORM, Presentation.TWIST)))]


def _suite_bialgebra(config):
    from .coalgebra import verify_bialgebra

    deg = config.get("degree") or 6
    return [verify_bialgebra(p, deg) for p in _presentations(config, (Presentation.NORM, Presentation.TWIST))]


def _suite_hopf_twist(config):
    from .coalgebra import verify_antipode_twist

    return [verify_antipode_twist(config.get("degree") or 6)]


def _suite_vn_norm(config):
    from .coalgebra import verify_vn_antipode_norm

    return [verify_vn_antipode_norm(config.get("degree") or 6)]


def _suite_no_antipode(config):
    from .coalgebra import check_norm_no_antipode

    return [check_norm_no_antipode(config.get("n") or 3)]


def _suite_coideal(config):
    from .quotient import verify_coideal
    from .rmatrix import quotient_spec

    n = config.get("n") or 3
    return [verify_coideal(quotient_spec(k, n)) for k in _kinds(config)]


def _r_suite(check, default_kinds=("uqsl2", "hopf", "vnhopf", "pierce")):
    def run(config):
        from .rmatrix import build_r_matrix

        n = config.get("n") or 3
        return [check(build_r_matrix(k, n)) for k in _kinds(config, default_kinds)]

    return run


def _suite_phi(config):
    from .checks import check_phi_injectivity

    if config.get("degree") is not None:
        return [check_phi_injectivity(degree_bound=config["degree"])]
    return [check_phi_injectivity(box=(3, 6))]


def _suite_pierce(config):
    from .checks import check_pierce_decomposition

    return [check_pierce_decomposition(degree=config.get("degree") or 4)]


def _lazy(name):
    def check(R):
        from . import rmatrix

        return getattr(rmatrix, name)(R)

    return check


SUITES = {
    "confluence": _suite_confluence,
    "presentation-equivalence": _suite_equivalence,
    "bialgebra": _suite_bialgebra,
    "hopf-twist": _suite_hopf_twist,
    "vn-norm": _suite_vn_norm,
    "no-antipode-norm": _suite_no_antipode,
    "coideal": _suite_coideal,
    "rmatrix-intertwine": _r_suite(_lazy("check_quasi_cocommutativity")),
    "hexagon": _r_suite(_lazy("check_hexagon")),
    "ybe": _r_suite(_lazy("check_ybe")),
    "near-r-regularity": _r_suite(_lazy("check_near_r_regularity"), ("pierce",)),
    "r-inverse": _r_suite(_lazy("check_inverse"), ("uqsl2", "hopf", "vnhopf")),
    "phi-injectivity": _suite_phi,
    "pierce-decomposition": _suite_pierce,
}


def run_suite(name, config=None) -> Report:
    """Run a named suite; ``config`` may set n, degree, presentation, kind."""
    config = {k: v for k, v in (config or {}).items() if v is not None}
    if "presentation" in config:
        config["presentation"] = Presentation.parse(config["presentation"]).value
    try:
        runner = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(SUITES)}") from None
    return _combine(name, runner(config), config)


# -- expression helpers ------------------------------------------------------------------


def _infer_presentation(texts, given):
    if given:
        return Presentation.parse(given)
    syms = {tok[1] for t in texts for tok in tokenize(t) if tok[0] == "SYM"}
    if syms & {"k", "kinv", "e", "f"}:
        return Presentation.UQSL2
    return Presentation.NORM


def _algebra(args, texts):
    pres = _infer_presentation(texts, getattr(args, "presentation", None))
    n = getattr(args, "n", None)
    if n:
        from .quotient import QuotientSpec, build_quotient

        return build_quotient(QuotientSpec(n, pres))
    return get_algebra(pres)


def _element(text, alg):
    from .quotient import QuotientAlgebra

    if isinstance(alg, QuotientAlgebra):
        from .quotient import reduce_into

        return reduce_into(parse_element(text, get_algebra(alg.presentation)), alg)
    return parse_element(text, alg)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- commands ---------------------------------------------------------------------------


def cmd_nf(args):
    alg = _algebra(args, [args.expr])
    print(format_value(_element(args.expr, alg), unicode=args.unicode))
    return 0


def cmd_mul(args):
    alg = _algebra(args, args.exprs)
    out = None
    for text in args.exprs:
        x = _element(text, alg)
        out = x if out is None else out * x
    print(format_value(out, unicode=args.unicode))
    return 0


def _variant_algebra(args, text, variant):
    from .coalgebra import _variant

    if variant is None:
        return _algebra(args, [text])
    pres = _variant(variant).value
    if args.presentation and args.presentation != pres:
        raise MixedPresentation(f"variant {variant!r} does not match presentation {args.presentation!r}")
    args.presentation = pres
    return _algebra(args, [text])


def cmd_delta(args):
    from .coalgebra import coproduct

    alg = _variant_algebra(args, args.expr, args.variant)
    print(format_value(coproduct(_element(args.expr, alg)), unicode=args.unicode))
    return 0


def cmd_antipode(args):
    from .coalgebra import antipode

    alg = _variant_algebra(args, args.expr, args.variant)
    print(format_value(antipode(_element(args.expr, alg)), unicode=args.unicode))
    return 0


def cmd_counit(args):
    from .coalgebra import counit

    alg = _algebra(args, [args.expr])
    print(format_value(counit(_element(args.expr, alg))))
    return 0


def cmd_conv(args):
    from .coalgebra import convolution, named_map

    if args.presentation is None:
        names = {args.left, args.right}
        if "S" in names:
            args.presentation = "twist"
        elif "T" in names:
            args.presentation = "norm"
    alg = _algebra(args, [args.expr])
    value = convolution(named_map(args.left, alg), named_map(args.right, alg), _element(args.expr, alg))
    print(format_value(value, unicode=args.unicode))
    return 0


def cmd_rmatrix(args):
    from .rmatrix import build_r_matrix, r_matrix_triplets

    R = build_r_matrix(args.kind, args.n)
    payload = {
        "schema": 1,
        "kind": R.kind.value,
        "n": R.n,
        "terms": [list(t) for t in r_matrix_triplets(R)],
    }
    _emit(json.dumps(payload, indent=2, ensure_ascii=False), args.out)
    return 0


def cmd_verify(args):
    config = {"n": args.n, "degree": args.degree, "presentation": args.presentation, "kind": args.kind}
    report = run_suite(args.suite, config)
    _emit(report.to_json(), args.out)
    print(report.summary(), file=sys.stderr)
    return 0 if report.passed else 1


def cmd_parse(args):
    print(parse(args.expr))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="uqpierce", description="Exact computations in U_q(sl2) and its Pierce extensions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n=True):
        sp.add_argument("--presentation", choices=["norm", "twist", "uqsl2"])
        if n:
            sp.add_argument("--n", type=int, help="work in the quotient at a primitive n-th root of unity")
        sp.add_argument("--unicode", action="store_true", help="print overlines and the tensor sign")

    sp = sub.add_parser("nf", help="normal form of an expression")
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("mul", help="product of several expressions")
    sp.add_argument("exprs", nargs="+")
    common(sp)
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("delta", help="coproduct")
    sp.add_argument("expr")
    sp.add_argument("--variant", choices=["norm", "twist", "uqsl2"])
    common(sp)
    sp.set_defaults(func=cmd_delta)

    sp = sub.add_parser("antipode", help="antipode S (twist), T (norm) or S0 (uqsl2)")
    sp.add_argument("expr")
    sp.add_argument("--variant", choices=["s", "t", "s0"])
    common(sp)
    sp.set_defaults(func=cmd_antipode)

    sp = sub.add_parser("counit", help="counit")
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_counit)

    sp = sub.add_parser("conv", help="convolution (f*g)(x); maps: id, S, T, S0, eps or chains like T*id")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_conv)

    sp = sub.add_parser("rmatrix", help="R-matrix coordinates as JSON")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--kind", choices=["uqsl2", "hopf", "vnhopf", "pierce"], default="hopf")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_rmatrix)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help=", ".join(SUITES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--presentation", choices=["norm", "twist", "uqsl2"])
    sp.add_argument("--kind", choices=["uqsl2", "hopf", "vnhopf", "pierce"])
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExpressionSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        if exc.text:
            print("  " + exc.text, file=sys.stderr)
            print("  " + " " * exc.pos + "^", file=sys.stderr)
        return 2
    except (MixedPresentation, InvalidSpec, UnknownSuite, DivisionByZero, NotInvertible, CoidealCheckFailed, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
