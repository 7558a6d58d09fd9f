"""Command-line interface.

Subcommands: reduce, svp, verify, bench, bounds, example2.
Matrix files use the plain text format of kzlat.linalg (header "m n",
then rows, 17 significant digits).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bounds as bnd
from .errors import OverflowWatch
from .harness import (
    ALL_ALGORITHMS,
    BENCH_COLUMNS,
    BenchSpec,
    FLOP_CONVENTION,
    cmd_example2,
    run_bench,
)
from .kz import KzStats, kz_reduce_improved, kz_reduce_zqw
from .linalg import qr_factorize, read_int_matrix, read_matrix, write_matrix
from .lll import LLLParams, lll_reduce
from .svp import lll_aided_svp
from .verify import assert_kz_reduced


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=float, default=0.99)
    p.add_argument("--format", choices=("csv", "json", "text"), default="text")


def _cmd_reduce(args) -> int:
    a = read_matrix(args.input)
    params = LLLParams(args.delta)
    if args.algorithm == "lll":
        red = lll_reduce(qr_factorize(a).r, params)
    else:
        fn = kz_reduce_zqw if args.algorithm == "kz-zqw" else kz_reduce_improved
        try:
            red = fn(a, params, watchdog=args.watchdog_53bit)
        except OverflowWatch as exc:
            print(f"watchdog fired: {exc}", file=sys.stderr)
            return 2
    if args.output_r:
        write_matrix(red.r, args.output_r)
    if args.output_z:
        write_matrix(red.z, args.output_z)
    if args.format == "json":
        print(json.dumps({"r": red.r.tolist(), "z": [[int(v) for v in row] for row in red.z]}))
    else:
        print("R =")
        print(np.array_str(red.r, precision=6, suppress_small=True))
        print("Z =")
        print(np.array_str(np.asarray(red.z, dtype=object)))
    return 0


def _cmd_svp(args) -> int:
    a = read_matrix(args.input)
    sol = lll_aided_svp(qr_factorize(a).r, LLLParams(args.delta), args.variant)
    out = {
        "norm": sol.norm,
        "z_reduced": list(sol.z),
        "x_original": list(sol.x),
        "flops": sol.counters.flops,
        "nodes": sol.counters.nodes,
    }
    if args.format == "json":
        print(json.dumps(out))
    else:
        for key, val in out.items():
            print(f"{key}: {val}")
    return 0


def _cmd_verify(args) -> int:
    a = read_matrix(args.input)
    z = read_int_matrix(args.z)
    r = qr_factorize(a.astype(float) @ np.asarray([[float(v) for v in row] for row in z])).r
    cert = assert_kz_reduced(r, z, a, args.delta)
    payload = {
        "size_reduced": cert.size_reduced,
        "lovasz": cert.lovasz,
        "kz_condition": cert.kz_condition,
        "unimodular": cert.unimodular,
        "reconstruction_ok": cert.reconstruction_ok,
        "all_pass": cert.all_pass,
        "det_z": cert.details.get("det_z"),
    }
    if args.report == "json":
        print(json.dumps(payload))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")
    return 0 if cert.all_pass else 1


def _cmd_bench(args) -> int:
    spec = BenchSpec(
        cases=tuple(int(c) for c in args.cases.split(",")),
        n_list=tuple(int(n) for n in args.n_list.split(",")),
        trials=args.trials,
        algorithms=tuple(args.algorithms.split(",")),
        delta=args.delta,
        seed0=args.seed,
        watchdog=args.watchdog_53bit,
        certify=args.certify,
        emit_certs=args.emit_certs,
    )
    print(FLOP_CONVENTION)
    print(BENCH_COLUMNS)
    for rec in run_bench(spec):
        print(rec.csv_row())
    return 0


_TABLES = {
    "hermite": ("n,exact,linear,blichfeldt,neu17,ratio_linear_to_blichfeldt", 1),
    "f": ("n,f,hanrot_stehle", 1),
    "g": ("i,g,g_exact,boosted_column", 1),
    "h": ("n,h,od_bound,boosted_od", 1),
    "svp-entry": ("n,i,bound", 1),
}


def _cmd_bounds(args) -> int:
    table = args.table
    print(_TABLES[table][0])
    if table == "hermite":
        for n in range(1, args.n_max + 1):
            try:
                exact = f"{bnd.hermite_exact(n):.12g}"
            except Exception:
                exact = ""
            neu = f"{bnd.neu17_linear_bound(n):.12g}" if n >= 3 else ""
            lin = bnd.hermite_linear_bound(n)
            bli = bnd.blichfeldt_bound(n)
            ratio = f"{lin / bli:.12g}" if n >= 2 else ""
            print(f"{n},{exact},{lin:.12g},{bli:.12g},{neu},{ratio}")
    elif table == "f":
        for n in range(1, args.n_max + 1):
            hs = f"{bnd.hanrot_stehle_bound(n):.12g}" if n >= 2 else ""
            print(f"{n},{bnd.kz_constant_bound(n):.12g},{hs}")
    elif table == "g":
        for i in range(1, args.n_max + 1):
            boosted = f"{bnd.boosted_column_bound(i):.12g}" if i >= 2 else ""
            exact = (
                f"{bnd.column_ratio_bound(i, exact=True):.12g}" if i <= 8 else ""
            )
            print(f"{i},{bnd.column_ratio_bound(i):.12g},{exact},{boosted}")
    elif table == "h":
        for n in range(1, args.n_max + 1):
            print(
                f"{n},{bnd.od_h(n):.12g},{bnd.od_bound(n):.12g},"
                f"{bnd.boosted_od_bound(n):.12g}"
            )
    else:  # svp-entry
        for n in range(1, args.n_max + 1):
            for i in range(1, n + 1):
                print(f"{n},{i},{bnd.svp_entry_bound(n, i, args.delta):.12g}")
    return 0


def _cmd_example2(args) -> int:
    report = cmd_example2(args.delta)
    if args.format == "json":
        print(json.dumps(report))
    else:
        print(json.dumps(report, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="kzlat", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="run a reduction on a matrix file")
    p.add_argument("--algorithm", choices=("kz-zqw", "kz-improved", "lll"), required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output-r")
    p.add_argument("--output-z")
    p.add_argument("--watchdog-53bit", action="store_true")
    _add_common(p)
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("svp", help="solve an SVP via LLL-aided enumeration")
    p.add_argument("--input", required=True)
    p.add_argument("--variant", choices=("original", "dkwz", "improved"), default="improved")
    _add_common(p)
    p.set_defaults(fn=_cmd_svp)

    p = sub.add_parser("verify", help="certify a reduction output")
    p.add_argument("--input", required=True, help="original basis matrix file")
    p.add_argument("--z", required=True, help="unimodular transform file")
    p.add_argument("--delta", type=float, default=0.99)
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bench", help="benchmark loop, CSV on stdout")
    p.add_argument("--cases", default="1,2")
    p.add_argument("--n-list", default="1,2,3,4,5,6,7,8,9,10")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--algorithms", default=",".join(ALL_ALGORITHMS))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--watchdog-53bit", action="store_true")
    p.add_argument("--certify", action="store_true")
    p.add_argument("--emit-certs", metavar="DIR")
    _add_common(p)
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("bounds", help="emit bound tables as CSV")
    p.add_argument("--table", choices=tuple(_TABLES), required=True)
    p.add_argument("--n-max", type=int, default=64)
    _add_common(p)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("example2", help="replicate the embedded 5x5 example")
    _add_common(p)
    p.set_defaults(fn=_cmd_example2)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
