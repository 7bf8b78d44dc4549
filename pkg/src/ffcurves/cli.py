"""Command-line entry point: ``ffcurves <subcommand> ...``.

Reports go to stdout (``--format json|csv|text``), a short human summary to
stderr.  Exit status: 0 on success, 2 when the run succeeded but an input
violates a hypothesis of the counting theorem, 1 on errors.
"""

import argparse
import json
import sys

from . import bateman_horn as BH
from . import census as CS
from . import curves as CV
from .field import make_field
from .parse import ParseError, parse_poly

EXIT_OK, EXIT_ERROR, EXIT_WARNING = 0, 1, 2


class CliError(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _field(args):
    return make_field(args.p, args.k)


def _bipolys(args, ctx):
    texts = args.poly or []
    homs = getattr(args, "poly_homogeneous", None) or []
    if not texts and not homs:
        raise CliError("give at least one --poly (or --poly-homogeneous)")
    out = [parse_poly(t, "bi", ctx) for t in texts]
    out += [parse_poly(t, "hom", ctx).dehomogenize() for t in homs]
    return out


def _form(args, ctx):
    if args.poly_homogeneous:
        return parse_poly(args.poly_homogeneous, "hom", ctx)
    if args.poly:
        return parse_poly(args.poly, "bi", ctx).homogenize()
    raise CliError("give --poly-homogeneous or --poly")


def _emit(args, payload, text, csv_text=None):
    if args.format == "json":
        out = payload if isinstance(payload, str) else _dump(payload)
    elif args.format == "csv":
        if csv_text is None:
            raise CliError(f"--format csv is not available for {args.command}")
        out = csv_text
    else:
        out = text
    sys.stdout.write(out if out.endswith("\n") else out + "\n")


# ------------------------------------------------------------ subcommands


def cmd_count(args):
    ctx = _field(args)
    fs = _bipolys(args, ctx)
    rep = CS.theorem_c_report(fs, ctx, check_hypotheses=not args.skip_hypotheses, seed=args.seed)
    _emit(args, rep.to_json(), rep.summary(), rep.to_csv())
    print(rep.summary(), file=sys.stderr)
    return EXIT_WARNING if rep.warnings else EXIT_OK


def cmd_census(args):
    ctx = _field(args)
    fs = _bipolys(args, ctx)
    rep = CS.factorization_census(fs, ctx, check_hypotheses=args.check_hypotheses, seed=args.seed)
    table = "\n".join(
        f"{CS.format_type(k)}\t{rep.type_table.get(k, 0)}\t{float(v):.4f}"
        for k, v in sorted(rep.predicted_table.items(), reverse=True)
    )
    _emit(args, rep.to_json(), rep.summary() + "\n" + table, rep.to_csv())
    print(rep.summary(), file=sys.stderr)
    return EXIT_WARNING if rep.warnings else EXIT_OK


def cmd_check_curve(args):
    ctx = _field(args)
    if args.poly_homogeneous:
        f = parse_poly(args.poly_homogeneous, "hom", ctx).dehomogenize()
    elif args.poly:
        f = parse_poly(args.poly, "bi", ctx)
    else:
        raise CliError("give --poly or --poly-homogeneous")
    rep = CV.check_char0like_nodal(f, depth=args.depth, seed=args.seed)
    data = {"schema": CS.SCHEMA, "poly": str(f), "field": [ctx.p, ctx.k], **rep.to_json()}
    lines = [f"{key}: {value}" for key, value in data.items() if key != "singular_points"]
    lines += [f"singular point {sp['point']['coords']}: {sp['classification']}" for sp in data["singular_points"]]
    _emit(args, data, "\n".join(lines))
    print(f"{f}: char0like_nodal = {rep.char0like_nodal}", file=sys.stderr)
    return EXIT_OK


def cmd_dual(args):
    ctx = _field(args)
    F = _form(args, ctx)
    G = CV.dual_curve(F, seed=args.seed)
    _emit(args, {"schema": CS.SCHEMA, "curve": str(F), "dual": str(G), "degree": G.degree}, str(G))
    print(f"dual of {F} has degree {G.degree}", file=sys.stderr)
    return EXIT_OK


def cmd_swan(args):
    res = CS.swan_scan(args.bound)
    data = res.to_dict()
    _emit(args, data, f"all_reducible: {res.all_reducible}\ncases: {res.cases}")
    print(f"g^8 + T^3 over {res.cases} polynomials g: all reducible = {res.all_reducible}", file=sys.stderr)
    return EXIT_OK


def cmd_bh(args):
    if not args.poly:
        raise CliError("give at least one --poly")
    fs = [parse_poly(t, "int") for t in args.poly]
    rep = BH.bh_report(fs, args.x, cutoff=args.cutoff, form=args.form)
    d = rep.to_dict()
    text = "\n".join(f"{k}: {d[k]}" for k in ("s_partial", "cutoff", "zero_flag", "empirical", "prediction", "ratio"))
    _emit(args, d, text)
    print(f"s = {float(rep.series.value):.6f}, N(x) = {rep.empirical}, ratio = {rep.ratio}", file=sys.stderr)
    return EXIT_WARNING if rep.warnings else EXIT_OK


def cmd_group_check(args):
    if args.table:
        table = json.loads(args.table)
        name = "table"
    else:
        table = CS.parse_group(args.group)
        name = args.group
    d = CS.validate_group_table(table)
    h = CS.regular_stabilizer_size(table)
    _emit(args, {"schema": CS.SCHEMA, "group": name, "order": d, "stabilizer_size": h, "equal": h == d}, f"|H| = {h}, d = {d}")
    print(f"{name}: |H| = {h}, d = {d}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser():
    ap = argparse.ArgumentParser(prog="ffcurves", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, field=True):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--seed", type=int, default=0, help="seed for sampling batches")
        if field:
            p.add_argument("--p", type=int, required=True, help="characteristic")
            p.add_argument("--k", type=int, default=1, help="extension degree")
        return p

    p = common(sub.add_parser("count", help="count pairs with all specializations irreducible"))
    p.add_argument("--poly", action="append", help="f(T, X); repeat for several")
    p.add_argument("--poly-homogeneous", action="append", help="F(X0, X1, X2), dehomogenized at X0 = 1")
    p.add_argument("--skip-hypotheses", action="store_true", help="do not run the curve checks")
    p.set_defaults(func=cmd_count)

    p = common(sub.add_parser("census", help="factorization-type table vs. cycle-type densities"))
    p.add_argument("--poly", action="append")
    p.add_argument("--poly-homogeneous", action="append")
    p.add_argument("--check-hypotheses", action="store_true")
    p.set_defaults(func=cmd_census)

    p = common(sub.add_parser("check-curve", help="absolute irreducibility, nodes, flexes, bitangents, strangeness"))
    p.add_argument("--poly")
    p.add_argument("--poly-homogeneous")
    p.add_argument("--depth", type=int, default=None, help="largest extension degree for singular points")
    p.set_defaults(func=cmd_check_curve)

    p = common(sub.add_parser("dual", help="equation of the dual curve"))
    p.add_argument("--poly")
    p.add_argument("--poly-homogeneous")
    p.set_defaults(func=cmd_dual)

    p = common(sub.add_parser("swan", help="g^8 + T^3 over GF(2)"), field=False)
    p.add_argument("--bound", type=int, default=8, help="largest degree of g")
    p.set_defaults(func=cmd_swan)

    p = common(sub.add_parser("bh", help="singular series and prime counts"), field=False)
    p.add_argument("--poly", action="append", help="integer polynomial in X; repeat for several")
    p.add_argument("--x", type=int, default=10**6)
    p.add_argument("--cutoff", type=int, default=10**6, help="largest prime in the product")
    p.add_argument("--form", choices=("literal", "integral"), default="literal")
    p.set_defaults(func=cmd_bh)

    p = common(sub.add_parser("group-check", help="centralizer of a regular permutation group"), field=False)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--group", help="cyclic:N, klein or symmetric:N")
    g.add_argument("--table", help="Cayley table as a JSON list of rows")
    p.set_defaults(func=cmd_group_check)
    return ap


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (CliError, ParseError, ValueError, ArithmeticError, RuntimeError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())
