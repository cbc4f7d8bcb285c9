"""Command-line driver: ``ggs-codes <subcommand> [options]``.

Every subcommand is a thin composition of library calls.  Hypothesis
failures exit with status 2 and name the failed condition on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter

from . import agcode, aut, derived, pzero, qtwo
from .curve import curve_params, enumerate_points
from .errors import GGSError, HypothesisViolated
from .semigroup import Semigroup


def _semigroup(params, point: str) -> Semigroup:
    if point == "p0":
        return pzero.h_p0(params.q, params.n, clip=True)
    return agcode.semigroup_infinity(params)


def _emit(args, header: list[str], rows: list[list], payload=None) -> str:
    if args.format == "json":
        data = payload if payload is not None else [dict(zip(header, r)) for r in rows]
        return json.dumps(data, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _frac(x) -> list:
    return [f"{x.numerator}/{x.denominator}", f"{float(x):.6g}"]


def cmd_semigroup(args) -> str:
    p = curve_params(args.q, args.n)
    if args.point == "p0":
        ls = pzero.build_lsets(p.q, p.n)
        tag = {v: f"L{i}" for i, s in enumerate(ls.sets, 1) for v in s}
        s = _semigroup(p, "p0")
        rows = [[x, tag.get(x, "")] for x in s.elements_upto(args.max)]
        return _emit(args, ["rho", "lset"], rows)
    s = _semigroup(p, "infinity")
    elems = s.elements_upto(args.max)
    if p.q == 2 and p.n >= 5:
        rows = [[x, *qtwo.triple_of(x, p.n)] for x in elems]
        return _emit(args, ["rho", "i", "j", "k"], rows)
    return _emit(args, ["rho"], [[x] for x in elems])


def _closed_ok(p, point: str) -> bool:
    return point == "infinity" and p.q == 2 and p.n >= 5


def cmd_nu(args) -> str:
    p = curve_params(args.q, args.n)
    s = _semigroup(p, args.point)
    rows = []
    for l in range(max(args.lmin, 0), args.lmax + 1):
        rho = s.element(l + 1)
        closed = qtwo.nu_closed(qtwo.triple_of(rho, p.n), p.n) if _closed_ok(p, args.point) else ""
        rows.append([l, rho, s.nu(l), closed])
    return _emit(args, ["l", "rho_next", "nu", "nu_closed"], rows)


def cmd_dord(args) -> str:
    p = curve_params(args.q, args.n)
    s = _semigroup(p, args.point)
    rows = []
    for l in range(max(args.lmin, 1), args.lmax + 1):
        rho = s.element(l + 1)
        oracle = s.dord(l)
        if _closed_ok(p, args.point):
            t = qtwo.triple_of(rho, p.n)
            closed = qtwo.dord_closed(t, p.n)
            rows.append([l, rho, qtwo.classify(t, p.n), "Unresolved" if closed is None else closed, oracle])
        else:
            rows.append([l, rho, "", "", oracle])
    return _emit(args, ["l", "rho_next", "case", "d_ord_closed", "d_ord"], rows)


def cmd_table(args) -> str:
    p = curve_params(args.q, args.n)
    n_pts = p.n_affine
    if args.compare:
        s0 = _semigroup(p, "p0")
        sinf = _semigroup(p, "infinity")
        rows = [r for r in agcode.better_pairs(s0, sinf, n_pts, args.lmax) if r.l0 >= args.lmin]
        return _emit(args, agcode.COMPARE_HEADER, [[r.l0, r.linf, r.diff] for r in rows])
    s = _semigroup(p, args.point)
    rows = []
    for l in range(max(args.lmin, 1), args.lmax + 1):
        r = agcode.dual_params(l, s, n_pts)
        rows.append([r.l, r.rho, r.k_dual, r.d_ord, r.delta, *_frac(r.Delta)])
    return _emit(args, agcode.TABLE_HEADER + ["Delta_float"], rows)


def cmd_quantum(args) -> str:
    p = curve_params(args.q, args.n)
    fam = args.family
    if fam == "two_point":
        qp = derived.css_two_point(args.a, args.b, p)
    elif fam == "t1":
        qp = derived.css_family_t1(args.l, args.s, p)
    elif fam == "quant2":
        qp = derived.css_quant2(args.l, p)
    else:
        qp = derived.css_improved(args.l, args.s, p)
    d = qp.to_dict()
    d["label"] = qp.label()
    d["Delta_Q_float"] = float(qp.Delta_Q)
    return json.dumps(d, indent=2) + "\n"


def cmd_conv(args) -> str:
    p = curve_params(args.q, args.n)
    cp = derived.conv_params(args.rho, args.s, p)
    d = cp.to_dict()
    d["label"] = cp.label()
    return json.dumps(d, indent=2) + "\n"


def cmd_orbits(args) -> str:
    p = curve_params(args.q, args.n)
    pts = enumerate_points(p)
    rep = aut.orbit_report(p, pts)
    d = rep.to_dict()
    d["orbit_size_counts"] = {str(k): v for k, v in sorted(Counter(rep.orbit_sizes).items())}
    return json.dumps(d, indent=2) + "\n"


def cmd_code_aut(args) -> str:
    p = curve_params(args.q, args.n)
    order, report = aut.code_aut_report(args.l, p)
    return json.dumps({"l": args.l, "order": order, "hypotheses": report}, indent=2) + "\n"


def cmd_falsify(args) -> str:
    p = curve_params(args.q, args.n)
    pts = enumerate_points(p)
    s = agcode.semigroup_infinity(p)
    rows = []
    for rho in args.rho:
        code = agcode.build_code(rho, pts, p, s)
        w = agcode.weight_falsification(code, args.samples, args.seed)
        d = s.dord(s.index(code.l))
        rows.append([code.l, s.index(code.l), d, w, w >= d])
    return _emit(args, ["rho", "l", "d_ord", "min_weight_seen", "ok"], rows)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ggs-codes", description="One-point AG codes on GGS(q,n).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2)
    common.add_argument("--n", type=int, default=5)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--seed", type=int, default=agcode.DEFAULT_SEED)
    common.add_argument("--out", default=None, help="write to this file instead of stdout")
    ranged = argparse.ArgumentParser(add_help=False)
    ranged.add_argument("--point", choices=["infinity", "p0"], default="infinity")
    ranged.add_argument("--lmin", type=int, default=1)
    ranged.add_argument("--lmax", type=int, default=20)

    sub = ap.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("semigroup", parents=[common], help="list nongaps")
    sp.add_argument("--point", choices=["infinity", "p0"], default="infinity")
    sp.add_argument("--max", type=int, default=100)
    sp.set_defaults(func=cmd_semigroup)

    sub.add_parser("nu", parents=[common, ranged], help="Feng-Rao numbers").set_defaults(func=cmd_nu)
    sub.add_parser("dord", parents=[common, ranged], help="order bounds, closed form and brute force").set_defaults(func=cmd_dord)

    sp = sub.add_parser("table", parents=[common, ranged], help="dual-code parameter table")
    sp.add_argument("--compare", action="store_true", help="pair P_0 and P_inf codes by designed defect")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("quantum", parents=[common], help="CSS quantum code certificate")
    sp.add_argument("--family", choices=["two_point", "t1", "quant2", "improved"], default="t1")
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--s", type=int, default=1)
    sp.set_defaults(func=cmd_quantum)

    sp = sub.add_parser("conv", parents=[common], help="unit-memory convolutional code certificate")
    sp.add_argument("--rho", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.set_defaults(func=cmd_conv)

    sub.add_parser("orbits", parents=[common], help="orbits of the automorphism group").set_defaults(func=cmd_orbits)

    sp = sub.add_parser("code-aut", parents=[common], help="order of Aut(C(D, l P_inf))")
    sp.add_argument("--l", type=int, required=True)
    sp.set_defaults(func=cmd_code_aut)

    sp = sub.add_parser("falsify", parents=[common], help="random dual codewords against the order bound")
    sp.add_argument("--rho", type=int, nargs="+", default=[33, 99, 107])
    sp.add_argument("--samples", type=int, default=1000)
    sp.set_defaults(func=cmd_falsify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except HypothesisViolated as e:
        print(f"hypothesis failed: {e.failed}", file=sys.stderr)
        return 2
    except GGSError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
