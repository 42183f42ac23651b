"""Command-line front-end: invariants, HZ transforms, families, quivers,
and the fixture regression runner.

Exit codes: 0 success, 1 verification mismatch, 2 parse failure,
3 unsupported strand count/diagram, 4 decomposition not found.
"""
from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidError, BraidWord, FamilyIndex, parse_braid
from .decomp import DecompositionError, decompose
from .families import (FamilyError, pretzel_braid, predict_family, quiver_poly,
                       verify_family, z_en_closed_form)
from .fixtures import run_fixtures
from .homfly import HomflyError, alexander, homfly, jones
from .hz import HZError, check_fact_conditions, factorise, hz_via_characters
from .rmatrix import RMatrixError
from .young import partitions

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_NO_DECOMPOSITION = 4


class CliError(SystemExit):
    pass


def _braid(args) -> BraidWord:
    try:
        return parse_braid(args.word, args.strands)
    except BraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def cmd_homfly(args):
    b = _braid(args)
    try:
        h = homfly(b)
    except (HomflyError, RMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNSUPPORTED)
    racah = {str(Q): hq for Q, hq in h.racah.items()}
    if args.format == "json":
        payload = {"strands": b.strands, "writhe": b.writhe,
                   "H": h.normalised.to_json(), "Hbar": h.unnormalised.to_json(),
                   "racah": {k: v.to_json() for k, v in racah.items()}}
        if b.is_knot():
            payload["jones"] = jones(b).to_json()
            payload["alexander"] = alexander(b).to_json()
        print(json.dumps(payload, indent=1))
        return
    print(f"braid      : {b}  (strands {b.strands}, writhe {b.writhe}, "
          f"components {b.component_count()})")
    print(f"H          : {h.normalised}")
    print(f"Hbar       : {h.unnormalised}")
    for k in sorted(racah):
        print(f"h^{k:<8} : {racah[k]}")


def cmd_jones(args):
    b = _braid(args)
    try:
        print(jones(b))
    except (HomflyError, RMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNSUPPORTED)


def cmd_alexander(args):
    b = _braid(args)
    try:
        print(alexander(b))
    except (HomflyError, RMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNSUPPORTED)


def cmd_hz(args):
    b = _braid(args)
    try:
        z = hz_via_characters(b)
    except (HZError, HomflyError, RMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNSUPPORTED)
    cert = factorise(z)
    payload = {"Z": z.render(), "beta": list(z.den_exponents),
               "cancelled": list(z.cancelled), "cert": cert.to_json()}
    lines = [f"Z          : {z.render()}",
             f"beta       : {z.den_exponents}  cancelled: {z.cancelled}",
             "certificate: " + ("factorisable, alpha = %s" % (cert.alpha_exponents(),)
                                if cert.factorisable else "non-factorisable")]
    if args.series_terms:
        series = z.series(args.series_terms)
        payload["series"] = [[n, c.to_json()] for n, c in enumerate(series)]
        lines += [f"lambda^{n:<3}: {c}" for n, c in enumerate(series)]
    if args.check_conditions:
        if b.strands not in (3, 4, 5):
            print("error: factorisability conditions are stated for 3..5 strands",
                  file=sys.stderr)
            raise SystemExit(EXIT_UNSUPPORTED)
        rep = check_fact_conditions(b)
        payload["conditions"] = rep.to_json()
        for name, ok in rep.conditions:
            lines.append(f"condition  : {'satisfied' if ok else 'violated '} - {name}")
        lines.append(f"conditions agree with factoriser: {rep.agrees}")
    if args.decompose:
        try:
            d = decompose(z)
        except DecompositionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            if exc.residual is not None:
                res = exc.residual
                text = res if isinstance(res, str) else " ; ".join(str(c) for c in res)
                print(f"residual: {text}", file=sys.stderr)
            raise SystemExit(EXIT_NO_DECOMPOSITION)
        payload["decomposition"] = d.to_json()
        lines.append(f"decomposed : {d}")
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print("\n".join(lines))


def cmd_family(args):
    idx = FamilyIndex(args.m, args.j, args.k, args.l)
    pred = predict_family(idx)
    print(f"K^({idx.m})_{{{idx.j},{idx.k},{idx.l}}}: writhe {pred.writhe}")
    print(f"h^[(m-1)1] : {pred.h_top}")
    print(f"alpha      : {pred.alpha}")
    print(f"beta       : {pred.beta}")
    print(f"jones      : {pred.jones}")
    if idx.m <= 5:
        report = verify_family(idx)
        print(f"pipeline   : {'all match' if report.all_match else 'MISMATCH'}")
        if not report.all_match:
            print(f"  h_top {report.h_top_matches} factorisable {report.factorisable} "
                  f"alpha {report.alpha_matches} beta {report.beta_matches} "
                  f"jones {report.jones_matches}")
            raise SystemExit(EXIT_MISMATCH)
    else:
        print("pipeline   : skipped (R-matrices available up to 5 strands)")


def cmd_quiver(args):
    series, n = args.series.upper(), args.n
    try:
        qp = quiver_poly(series, n)
        z = qp.hz()
    except FamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNSUPPORTED)
    print(f"{series}_{n}: Z = {z.render()}")
    if series == "E" and n >= 4:
        closed = z_en_closed_form(n)
        pb = pretzel_braid(n)
        zp = hz_via_characters(pb)
        names = {4: "5_1 = T(2,5)", 5: "L7n1{0}", 6: "8_19 = T(3,4)", 7: "L9n15{0}",
                 8: "10_124 = T(3,5)", 9: "L11n204{0}", 10: "12n_242"}
        ok = z == closed == zp
        print(f"closed form: {closed.render()}")
        print(f"pretzel P(3,-2,{n - 3})"
              + (f" [{names[n]}]" if n in names else "")
              + f" braid: {pb}")
        print(f"cross-check: {'all equal' if ok else 'MISMATCH'}")
        if not ok:
            raise SystemExit(EXIT_MISMATCH)


def cmd_verify(args):
    results = run_fixtures(args.fixtures, names=args.only or None)
    bad = [r for r in results if not r.ok]
    for r in results:
        if not r.ok or args.verbose:
            print(r.line())
    print(f"{len(results) - len(bad)}/{len(results)} checks passed")
    if bad:
        raise SystemExit(EXIT_MISMATCH)


def build_parser():
    p = argparse.ArgumentParser(prog="hzknot",
                                description="Exact HOMFLY-PT / Harer-Zagier engine")
    sub = p.add_subparsers(dest="command", required=True)

    def braid_cmd(name, fn, help_):
        c = sub.add_parser(name, help=help_)
        c.add_argument("word", help="whitespace-separated signed generator indices, e.g. '1 -2 1 -2'")
        c.add_argument("--strands", type=int, required=True)
        c.add_argument("--format", choices=("text", "json"), default="text")
        c.set_defaults(func=fn)
        return c

    braid_cmd("homfly", cmd_homfly, "HOMFLY-PT polynomial and Racah table")
    braid_cmd("jones", cmd_jones, "Jones polynomial J(q^2)")
    braid_cmd("alexander", cmd_alexander, "Alexander polynomial (knots)")
    hz = braid_cmd("hz", cmd_hz, "Harer-Zagier transform and certificate")
    hz.add_argument("--decompose", action="store_true",
                    help="factorised-form decomposition")
    hz.add_argument("--check-conditions", action="store_true",
                    help="evaluate the strand-specific factorisability conditions")
    hz.add_argument("--series-terms", type=int, default=0, metavar="N",
                    help="print the lambda-series to order N")

    fam = sub.add_parser("family", help="hyperbolic-extension family K^(m)_{j,k,l}")
    fam.add_argument("m", type=int)
    fam.add_argument("j", type=int)
    fam.add_argument("k", type=int)
    fam.add_argument("l", type=int)
    fam.set_defaults(func=cmd_family)

    qv = sub.add_parser("quiver", help="ADE forest-quiver polynomial HZ")
    qv.add_argument("series", choices=("A", "D", "E", "a", "d", "e"))
    qv.add_argument("n", type=int)
    qv.set_defaults(func=cmd_quiver)

    vf = sub.add_parser("verify", help="run the fixture regression table")
    vf.add_argument("fixtures", nargs="?", default=None,
                    help="path to a fixtures JSON file (default: packaged table)")
    vf.add_argument("--only", nargs="*", help="restrict to named fixtures")
    vf.add_argument("--verbose", action="store_true", help="print passing checks too")
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.func(args)


if __name__ == "__main__":
    main()
