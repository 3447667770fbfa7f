"""Command line interface.

Subcommands:
  catalog   list the geometry catalog
  bach      Bach tensor of one diagonal metric (both routes available)
  verify    gradient soliton certificate for one metric
  classify  soliton families and certification per geometry
  flow      numerical Bach flow integration with CSV/JSON/PNG output
  table1    recompute and check the full classification table

Metrics are given as "g00,g11,g22,g33" with integer or p/q entries;
values parse as floats unless --exact asks for rational arithmetic.
BACHFLOW_THREADS caps fan-out workers for classify/table1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .curvature import DiagonalMetric
from .geometry import bracket_table, catalog, entry
from .bach import CLOSED_FORM_TAGS, bach_tensor
from .solitons import classify, classify_all, verify_soliton
from . import flow as flowmod
from . import report as reportmod


def _metric(args) -> DiagonalMetric:
    return DiagonalMetric.parse(args.metric, exact=args.exact)


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return repr(v)


def _print_json(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.json:
        _print_json([
            {
                "tag": e.tag,
                "label": e.label,
                "split": e.split,
                "structure": bracket_table(e.tag).describe(),
                "note": e.note,
            }
            for e in catalog()
        ])
        return 0
    for e in catalog():
        closed = " [closed form]" if e.tag in CLOSED_FORM_TAGS else ""
        print(f"{e.tag:10s} {e.label:15s} split={e.split:4s}{closed}")
        if args.verbose:
            desc = bracket_table(e.tag).describe()
            if desc["kind"] == "group":
                shown = "; ".join(desc["brackets"]) or "(abelian)"
                print(f"{'':10s} brackets: {shown}")
            elif desc["kind"] == "surface":
                print(f"{'':10s} surface scalar curvature at unit scale: "
                      f"{desc['reference_scalar_curvature']}")
            if e.note:
                print(f"{'':10s} note: {e.note}")
    return 0


def cmd_bach(args) -> int:
    g = _metric(args)
    routes = ("curvature", "closed") if args.route == "both" else (args.route,)
    results = {}
    for route in routes:
        B = bach_tensor(args.geometry, g, route)
        results[route] = B
    if args.json:
        _print_json({
            "geometry": args.geometry,
            "metric": [_fmt(v) for v in g.components],
            "mode": g.mode,
            "routes": {
                r: {
                    "components": [_fmt(v) for v in B.components],
                    "ratios": [_fmt(v) for v in B.ratios(g)],
                }
                for r, B in results.items()
            },
        })
    else:
        print(f"geometry  {args.geometry}")
        print(f"metric    ({', '.join(_fmt(v) for v in g.components)}) [{g.mode}]")
        for r, B in results.items():
            print(f"{r:9s} B = ({', '.join(_fmt(v) for v in B.components)})")
            print(f"{'':9s} b = ({', '.join(_fmt(v) for v in B.ratios(g))})")
    if len(results) == 2:
        a, b = (results[r].components for r in ("curvature", "closed"))
        if g.mode == "exact":
            agree = a == b
        else:
            scale = max(max(abs(v) for v in a), 1e-300)
            agree = max(abs(x - y) for x, y in zip(a, b)) <= 1e-9 * scale
        print(f"routes agree: {agree}")
        if not agree:
            return 3
    return 0


def cmd_verify(args) -> int:
    g = _metric(args)
    cert = verify_soliton(args.geometry, g, route=args.route)
    if args.json:
        _print_json(cert.to_json_dict())
        return 0
    print(f"geometry   {cert.geometry}")
    print(f"metric     ({', '.join(_fmt(v) for v in g.components)}) [{cert.mode}]")
    print(f"route      {cert.route}")
    print(f"ratios     ({', '.join(_fmt(v) for v in cert.ratios)})")
    print(f"c          {_fmt(cert.c)}")
    print(f"residual   {_fmt(cert.residual)}")
    print(f"verdict    {cert.verdict}")
    print(f"bach_flat  {cert.bach_flat}")
    if cert.potential is not None:
        print(f"potential  {cert.potential.description}")
        print(f"ric_grad   {_fmt(cert.ricci_gradient_norm_sq)}")
    return 0


def cmd_classify(args) -> int:
    if args.geometry == "all":
        entries = classify_all(threads=args.threads, scan=not args.no_scan)
    else:
        entries = (classify(args.geometry, scan=not args.no_scan),)
    if args.json:
        _print_json([e.to_json_dict() for e in entries])
        return 0
    for e in entries:
        fams = ", ".join(f.label for f in e.families) or "none"
        print(f"{e.tag:10s} solitons: {fams}  certified: {e.certified}")
        for f in e.families:
            print(f"{'':10s} - {f.label}: {f.constraint}; {f.potential}")
        for name, ok in e.identity_checks:
            print(f"{'':10s} [{'ok' if ok else 'FAIL'}] {name}")
        if e.grid is not None:
            print(f"{'':10s} [{'ok' if e.grid.ok else 'FAIL'}] grid scan "
                  f"({e.grid.initial_cells} cells, "
                  f"{len(e.grid.unmatched_candidates)} unmatched)")
        if e.notes:
            print(f"{'':10s} note: {e.notes}")
    return 0 if all(e.certified for e in entries) else 3


def cmd_flow(args) -> int:
    g = _metric(args)
    if g.mode == "exact":
        g = g.to_float()
    traj = flowmod.run_flow(args.geometry, g, args.t_max, method=args.method,
                            rtol=args.rtol, atol=args.atol, n_steps=args.steps)
    law = None
    if args.compare_c is not None:
        c = float(Fraction(args.compare_c))
        res = flowmod.self_similarity_check(args.geometry, g, c, args.t_max,
                                            method=args.method, rtol=args.rtol,
                                            atol=args.atol, n_steps=args.steps)
        traj, law = res.trajectory, res.law
        print(f"self-similarity max relative error: {res.max_rel_error:.3e}")
    print(f"status {traj.status}  accepted {traj.n_accepted} "
          f"rejected {traj.n_rejected}")
    print(f"final t = {float(traj.t[-1])!r}")
    print(f"final g = ({', '.join(repr(float(v)) for v in traj.g[-1])})")
    tstar = flowmod.collapse_time(traj)
    if tstar is not None:
        print(f"stopped early at t* = {tstar!r}")
    if args.csv:
        traj.write_csv(args.csv)
        print(f"wrote {args.csv}")
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(traj.to_json_dict(), fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.json_out}")
    if args.plot:
        reportmod.plot_trajectory(traj, args.plot, law=law)
        print(f"wrote {args.plot}")
    return 0


def cmd_table1(args) -> int:
    result = reportmod.build_table1(threads=args.threads, scan=not args.no_scan)
    if args.json:
        _print_json(reportmod.table1_json_payload(result))
    else:
        print(reportmod.render_text(result))
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        csv_path = os.path.join(args.out_dir, "table1.csv")
        json_path = os.path.join(args.out_dir, "table1.json")
        reportmod.write_table1_csv(result, csv_path)
        reportmod.write_table1_json(result, json_path)
        written = [csv_path, json_path]
        if not args.no_figures:
            written += reportmod.write_figures(args.out_dir)
        for p in written:
            print(f"wrote {p}", file=sys.stderr)
    return 0 if result.ok else 3


# ---------------------------------------------------------------------------


def _add_metric_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("-g", "--geometry", required=True, help="catalog tag")
    p.add_argument("-m", "--metric", required=True,
                   help='diagonal components "g00,g11,g22,g33" (int or p/q)')
    p.add_argument("--exact", action="store_true",
                   help="rational arithmetic (rejects decimal literals)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bachflow",
        description="Bach tensors, gradient solitons and Bach flow on "
                    "homogeneous product 4-manifolds",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the geometry catalog")
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("bach", help="Bach tensor of a diagonal metric")
    _add_metric_opts(p)
    p.add_argument("--route", choices=("curvature", "closed", "both"),
                   default="curvature")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bach)

    p = sub.add_parser("verify", help="gradient soliton certificate")
    _add_metric_opts(p)
    p.add_argument("--route", choices=("curvature", "closed"),
                   default="curvature")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("classify", help="soliton families per geometry")
    p.add_argument("-g", "--geometry", default="all",
                   help="catalog tag or 'all'")
    p.add_argument("--no-scan", action="store_true",
                   help="skip the bounded grid scan")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("flow", help="integrate the Bach flow")
    _add_metric_opts(p)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--method", choices=("dp45", "rk4"), default="dp45")
    p.add_argument("--rtol", type=float, default=1e-10)
    p.add_argument("--atol", type=float, default=1e-13)
    p.add_argument("--steps", type=int, default=256,
                   help="fixed step count for rk4")
    p.add_argument("--compare-c", default=None,
                   help="soliton constant for a self-similarity comparison; "
                        "write negative values as --compare-c=-1/1024")
    p.add_argument("--csv", default=None, help="write trajectory CSV here")
    p.add_argument("--json-out", default=None, help="write trajectory JSON here")
    p.add_argument("--plot", default=None, help="write trajectory PNG here")
    p.set_defaults(fn=cmd_flow)

    p = sub.add_parser("table1", help="recompute the classification table")
    p.add_argument("--out-dir", default=None,
                   help="write table1.csv, table1.json and figures here")
    p.add_argument("--no-figures", action="store_true")
    p.add_argument("--no-scan", action="store_true")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_table1)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
