"""Command-line front end.

Exit codes: 0 on success (including an Ambiguous quantization), 1 on usage
errors, 2 on mathematical failure (NoSolution, zero denominators, failed
equivariance checks).  Every rational is printed as a reduced ``p/q`` string.
"""
import argparse
import json
import sys
from fractions import Fraction

from .casimir import (
    Status,
    ZeroDenominator,
    casimir,
    critical_values,
    quantize_closed_form,
    quantize_iterative,
    verify_equivariance,
)
from .contact import (
    BASIS_MATRICES,
    GENERATORS,
    SpoMatrix,
    contact_hamiltonian,
    projective_embed,
)
from .expr import ExprSyntaxError, format_rational, parse_superfn
from .grassmann import Poly, SuperFn
from .operators import DiffOp, format_diffop, lie_density, lie_op
from .symbols import GradedSymbol, Symbol, gamma, gamma_closed_form, lie_symbol, q_aff


class UsageError(Exception):
    pass


# -- serialization --------------------------------------------------------

def rational_json(q):
    return format_rational(q)


def poly_json(p):
    return [format_rational(c) for c in p.coeffs]


def superfn_json(f):
    return {"f0": poly_json(f.f0), "f1": poly_json(f.f1),
            "f2": poly_json(f.f2), "f12": poly_json(f.f12)}


def superfn_from_json(obj):
    return SuperFn(*(Poly([Fraction(c) for c in obj.get(key, [])])
                     for key in ("f0", "f1", "f2", "f12")))


def diffop_json(D):
    return {
        "lambda": rational_json(D.lam),
        "mu": rational_json(D.mu),
        "terms": [
            {"l": l, "m": m, "n": n, "coeff": superfn_json(D.terms[(l, m, n)])}
            for (l, m, n) in sorted(D.terms)
        ],
    }


def diffop_from_json(obj):
    try:
        terms = {}
        for t in obj["terms"]:
            key = (int(t["l"]), int(t["m"]), int(t["n"]))
            c = superfn_from_json(t["coeff"])
            terms[key] = terms[key] + c if key in terms else c
        return DiffOp(terms, Fraction(obj["lambda"]), Fraction(obj["mu"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed operator JSON: {exc}") from exc


def symbol_json(S):
    return {"k": rational_json(S.k), "delta": rational_json(S.delta),
            "F1": superfn_json(S.F1), "F2": superfn_json(S.F2)}


def graded_json(G):
    return {"delta": rational_json(G.delta),
            "parts": [{"k": rational_json(S.k), "F1": superfn_json(S.F1), "F2": superfn_json(S.F2)}
                      for S in G.symbols()]}


def graded_text(G):
    if not G:
        return "0"
    return "\n".join(f"k={format_rational(S.k)}: F1 = {S.F1}; F2 = {S.F2}" for S in G.symbols())


def vector_field_json(V):
    return {"a": superfn_json(V.a), "b1": superfn_json(V.b1), "b2": superfn_json(V.b2)}


def diagnostics_json(diags):
    return [{"degree": rational_json(d.degree), "pivot": rational_json(d.pivot),
             "residual_zero": d.residual_zero,
             "residual": {"F1": superfn_json(d.residual.F1), "F2": superfn_json(d.residual.F2)}}
            for d in diags]


def diagnostics_text(diags):
    return "\n".join(
        f"  degree {format_rational(d.degree)}: pivot {format_rational(d.pivot)}, "
        f"residual {'zero' if d.residual_zero else f'({d.residual.F1}, {d.residual.F2})'}"
        for d in diags)


# -- argument handling ----------------------------------------------------

def _rational(text):
    try:
        if any(ch in text for ch in ".eE"):
            raise ValueError("decimals are not exact; use p/q")
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _expr(text):
    try:
        return parse_superfn(text)
    except ExprSyntaxError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from exc


def resolve_weights(args):
    """Return ``(lambda, delta)`` from any two of ``--lambda``, ``--mu``, ``--delta``."""
    lam, mu, delta = args.lam, args.mu, args.delta
    given = sum(v is not None for v in (lam, mu, delta))
    if given < 2:
        raise UsageError("give two of --lambda, --mu, --delta")
    if lam is None:
        lam = mu - delta
    if delta is None:
        delta = mu - lam
    if mu is not None and mu != lam + delta:
        raise UsageError(f"inconsistent weights: mu={mu} but lambda+delta={lam + delta}")
    return lam, delta


def build_symbol(args, delta):
    if args.k is None:
        raise UsageError("--k is required")
    F1 = _expr(args.f1)
    F2 = _expr(args.f2)
    try:
        return Symbol(args.k, delta, F1, F2)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def hamiltonian(args):
    if args.f is None:
        raise UsageError("--f is required")
    return GENERATORS.get(args.f) or _expr(args.f)


def emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands ---------------------------------------------------------------

def cmd_quantize(args):
    lam, delta = resolve_weights(args)
    S = build_symbol(args, delta)
    if args.method == "iterative":
        res = quantize_iterative(S, lam)
    else:
        try:
            res = quantize_closed_form(S, lam)
        except ZeroDenominator as exc:
            emit(args, {"status": "ZeroDenominator", "coefficient": exc.coefficient,
                        "degree": rational_json(exc.degree)}, f"ZeroDenominator: {exc}")
            return 2
    payload = {"status": res.status.value, "diagnostics": diagnostics_json(res.diagnostics)}
    lines = [f"status: {res.status.value}"]
    if res.operator is not None:
        payload["operator"] = diffop_json(res.operator)
        lines.append(format_diffop(res.operator))
    if res.diagnostics and res.status is not Status.UNIQUE:
        lines.append("diagnostics:")
        lines.append(diagnostics_text(res.diagnostics))
    emit(args, payload, "\n".join(lines))
    return 2 if res.status is Status.NO_SOLUTION else 0


def cmd_gamma(args):
    lam, delta = resolve_weights(args)
    S = build_symbol(args, delta)
    f = hamiltonian(args)
    G = gamma_closed_form(f, S, lam) if args.closed_form else gamma(f, S, lam)
    emit(args, graded_json(G), graded_text(G))
    return 0


def cmd_casimir(args):
    lam, delta = resolve_weights(args)
    S = build_symbol(args, delta)
    G = casimir(S, lam, args.rep)
    emit(args, graded_json(G), graded_text(G))
    return 0


def cmd_critical(args):
    values = sorted(critical_values(args.max_k))
    emit(args, [rational_json(v) for v in values], " ".join(format_rational(v) for v in values))
    return 0


def _load_operator(source):
    if source.startswith("@"):
        try:
            with open(source[1:], encoding="utf-8") as fh:
                source = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    try:
        obj = json.loads(source)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc
    return diffop_from_json(obj)


def cmd_lie(args):
    f = hamiltonian(args)
    if args.target == "density":
        if args.lam is None:
            raise UsageError("--lambda is required")
        out = lie_density(f, args.lam, _expr(args.f1))
        emit(args, superfn_json(out), str(out))
        return 0
    if args.target == "operator":
        if args.op is not None:
            D = _load_operator(args.op)
        else:
            lam, delta = resolve_weights(args)
            D = q_aff(build_symbol(args, delta), lam)
        out = lie_op(f, D)
        emit(args, diffop_json(out), format_diffop(out))
        return 0
    if args.delta is None:
        raise UsageError("--delta is required")
    out = GradedSymbol.of(lie_symbol(f, build_symbol(args, args.delta)))
    emit(args, graded_json(out), graded_text(out))
    return 0


def _parse_matrix(text):
    rows = [r.replace(",", " ").split() for r in text.split(";")]
    try:
        return SpoMatrix([[Fraction(v) for v in r] for r in rows])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad matrix {text!r}: {exc}") from exc


def cmd_embed(args):
    if args.basis is not None:
        if not 0 <= args.basis < len(BASIS_MATRICES):
            raise UsageError(f"--basis must be in 0..{len(BASIS_MATRICES) - 1}")
        A = BASIS_MATRICES[args.basis]
    elif args.matrix is not None:
        A = _parse_matrix(args.matrix)
    else:
        raise UsageError("give --matrix or --basis")
    try:
        V = projective_embed(A)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    f = contact_hamiltonian(V)
    emit(args, {"field": vector_field_json(V), "hamiltonian": superfn_json(f)},
         f"({V.a})*dx + ({V.b1})*dt1 + ({V.b2})*dt2\nhamiltonian: {f}")
    return 0


def cmd_check(args):
    lam, delta = resolve_weights(args)
    if args.k is None:
        raise UsageError("--k is required")
    method = "closed" if args.method == "closed-form" else "iterative"
    try:
        report = verify_equivariance(lam, delta, args.k, trials=args.trials, method=method,
                                     seed=args.seed, max_degree=args.max_degree)
    except ArithmeticError as exc:
        emit(args, {"ok": False, "error": str(exc)}, f"FAIL {exc}")
        return 2
    payload = {"ok": report.ok, "summary": report.summary(),
               "generators": {name: ok for name, ok in report.passed.items()}}
    lines = [report.summary()]
    for ce in report.counterexamples[:3]:
        lines.append(f"  {ce.generator}: difference {ce.diff()}")
    emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 2


# -- parser -------------------------------------------------------------

def _common(p, symbol=True):
    p.add_argument("--lambda", dest="lam", type=_rational, help="source weight")
    p.add_argument("--mu", type=_rational, help="target weight")
    p.add_argument("--delta", type=_rational, help="weight shift mu - lambda")
    if symbol:
        p.add_argument("--k", type=_rational, help="symbol degree (half-integer, e.g. 3/2)")
        p.add_argument("--f1", default="0", help="first density of the symbol")
        p.add_argument("--f2", default="0", help="second density of the symbol")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=6,
                   help="polynomial degree bound for random inputs")


def build_parser():
    parser = argparse.ArgumentParser(prog="spoquant",
                                     description="Exact spo(2|2)-equivariant quantization on S^{1|2}.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quantize", help="quantize a homogeneous symbol")
    _common(p)
    p.add_argument("--method", choices=("iterative", "closed-form"), default="iterative")
    p.set_defaults(func=cmd_quantize)

    p = sub.add_parser("gamma", help="defect of the affine quantization")
    _common(p)
    p.add_argument("--f", required=True, help="Hamiltonian (generator name or expression)")
    p.add_argument("--closed-form", action="store_true", help="use the closed formula")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("casimir", help="Casimir operator on a symbol")
    _common(p)
    p.add_argument("--rep", choices=("L", "calL"), default="L")
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("critical", help="critical weight shifts")
    p.add_argument("--max-k", type=_rational, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("lie", help="Lie derivative along X_f")
    _common(p)
    p.add_argument("--f", required=True, help="Hamiltonian (generator name or expression)")
    p.add_argument("--target", choices=("density", "operator", "symbol"), default="density")
    p.add_argument("--op", help="operator JSON, or @path to a JSON file")
    p.set_defaults(func=cmd_lie)

    p = sub.add_parser("embed", help="vector field of an spo(2|2) matrix")
    p.add_argument("--matrix", help="4x4 rows separated by ';', entries by spaces or commas")
    p.add_argument("--basis", type=int, help="index 0..7 of a standard basis matrix")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("check", help="randomized exact equivariance check")
    _common(p, symbol=False)
    p.add_argument("--k", type=_rational, help="symbol degree")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--method", choices=("iterative", "closed-form"), default="closed-form")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
