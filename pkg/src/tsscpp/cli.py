"""Command-line front end."""

import argparse
import csv
import json
import sys

from . import __version__
from .constterm import CT_KINDS, CtRequest, constant_term
from .exactmath import Poly
from .genfun import KINDS, GfRequest, gf_brute, gf_pfaffian
from .pfaffian import SkewMatrix, pfaffian
from .ppart import (
    at_most_k_rows,
    cols_even,
    cspp_kxy,
    cspp_kxy_image,
    enumerate_cspp,
    enumerate_mt,
    enumerate_tspp,
    enumerate_tsscpp,
    mt_k,
    profile,
    rows_even,
    subset_filter,
    tspp_k,
    ubar,
    v_cols,
    v_rows,
)
from .refnum import asm_doubly, asm_number, asm_refined, avs_number, card_cspp
from .structmat import (
    M_KINDS,
    SKEW_KINDS,
    build_b,
    build_b_truncated,
    build_m_matrix,
    build_skew,
    default_N,
    matrix_strings,
)
from .verify import SUITES, gating_failures, run_suite


def _emit(rows, fmt, out):
    """rows: list of dicts with identical keys."""
    if fmt == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
    elif fmt == "csv":
        if rows:
            w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
    else:
        for r in rows:
            out.write("  ".join(f"{k}={json.dumps(v) if isinstance(v, (dict, list)) else v}"
                                for k, v in r.items()) + "\n")


def _read_matrix(args):
    if args.matrix is not None:
        text = args.matrix
    elif args.file and args.file != "-":
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return json.loads(text)


def cmd_pfaffian(args, out):
    a = SkewMatrix(_read_matrix(args))
    out.write(f"{pfaffian(a)}\n")
    return 0


def cmd_matrix(args, out):
    N = args.N if args.N is not None else default_N(args.n, args.m or 0, args.k or 0)
    kind = args.kind
    if kind in SKEW_KINDS:
        if kind in ("L", "Lbar"):
            mat = build_skew(kind, args.n, m=args.m, k=args.k, eps=args.eps)
        else:
            mat = build_skew(kind, args.n, t=_param(args.t))
        rows = mat.to_strings()
    elif kind in ("B", "B_t", "B_tu"):
        mode = {"B": "plain", "B_t": "t", "B_tu": "tu"}[kind]
        rows = matrix_strings(build_b(args.n, args.m or 0, N, mode))
    elif kind == "B_trunc":
        rows = matrix_strings(build_b_truncated(args.n, args.m or 0, N, args.k or 0))
    elif kind in M_KINDS:
        rows = matrix_strings(build_m_matrix(kind, args.n, args.m or 0, N))
    else:
        raise ValueError(f"unknown matrix kind {kind!r}")
    json.dump(rows, out)
    out.write("\n")
    return 0


def _param(text):
    try:
        return int(text)
    except ValueError:
        return Poly.parse(text)


def _filter(objs, cls, spec):
    if not spec:
        return objs
    name, _, rest = spec.partition(":")
    nums = [int(x) for x in rest.split(",")] if rest else []
    if cls == "cspp":
        table = {"rows_even": lambda: rows_even, "cols_even": lambda: cols_even,
                 "rows": lambda: at_most_k_rows(*nums), "kxy": lambda: cspp_kxy(*nums),
                 "kxy_image": lambda: cspp_kxy_image(*nums)}
    elif cls == "tspp":
        table = {"k": lambda: tspp_k(*nums)}
    elif cls == "mt":
        table = {"k": lambda: mt_k(*nums)}
    else:
        table = {}
    if name not in table:
        raise ValueError(f"filter {name!r} not available for class {cls}")
    return subset_filter(objs, table[name]())


def _stats_row(c):
    K = c.K
    row = {"object": str(c)}
    for r in range(1, K + 1):
        row[f"Ubar{r}"] = ubar(c, r)
    row.update(VR=v_rows(c), VC=v_cols(c), profile=profile(c), size=c.size)
    return row


def cmd_enumerate(args, out):
    cls = args.cls
    if cls == "cspp":
        objs = enumerate_cspp(args.n, args.m)
    elif cls == "tspp":
        objs = enumerate_tspp(args.n, args.m)
    elif cls == "mt":
        objs = enumerate_mt(args.n)
    else:
        objs = enumerate_tsscpp(args.n, args.m)
    objs = _filter(objs, cls, args.filter)
    if args.stats:
        if cls != "cspp":
            raise ValueError("--stats is available for cspp only")
        _emit([_stats_row(c) for c in objs], args.format, out)
        return 0
    if cls == "tsscpp":
        data = [{"heights": [list(r) for r in a.heights()]} for a in objs]
    else:
        data = [o.to_json() for o in objs]
    if args.format == "json":
        json.dump(data, out, indent=None)
        out.write("\n")
    else:
        for o in objs:
            out.write(f"{o}\n" if cls != "tsscpp" else f"{json.dumps(o.heights())}\n")
    return 0


def _gf_request(args):
    return GfRequest(args.n, args.m, args.weight, N=args.N, k=args.k, r=args.r)


def cmd_gf(args, out):
    req = _gf_request(args)
    values = []
    if args.method in ("brute", "both"):
        values.append(gf_brute(req))
    if args.method in ("pfaffian", "both"):
        values.append(gf_pfaffian(req))
    for v in values:
        out.write(f"{v}\n")
    if args.method == "both":
        same = values[0] == values[1]
        out.write("MATCH\n" if same else "MISMATCH\n")
        return 0 if same else 1
    return 0


def cmd_constterm(args, out):
    req = CtRequest(args.n, args.m, args.weight, k=args.k, D=args.D)
    v = constant_term(req)
    out.write(f"{v}\n")
    if args.compare == "pfaffian":
        w = gf_pfaffian(GfRequest(args.n, args.m, args.weight, k=args.k))
        out.write(f"{w}\n")
        out.write("MATCH\n" if v == w else "MISMATCH\n")
        return 0 if v == w else 1
    return 0


def cmd_tables(args, out):
    top = args.max
    rows = []
    if args.family == "asm":
        for n in range(1, top + 1):
            rows.append({"n": n, "A_n": asm_number(n),
                         "refined": " ".join(str(asm_refined(n, r)) for r in range(1, n + 1))})
    elif args.family == "asm2":
        for n in range(2, top + 1):
            rows.append({"n": n, "A_n^{k,l}": ";".join(" ".join(map(str, r)) for r in asm_doubly(n))})
    elif args.family == "avs":
        for n in range(0, top + 1):
            rows.append({"2n+1": 2 * n + 1, "A^VS": avs_number(2 * n + 1)})
    else:
        for n in range(1, top + 1):
            for m in range(0, top + 1 - n):
                rows.append({"n": n, "m": m, "card": card_cspp(n, m)})
    _emit(rows, args.format, out)
    return 0


def cmd_verify(args, out):
    suites = SUITES if args.suite == "all" else (args.suite,)
    report = []
    for s in suites:
        report += run_suite(s, max_size=args.max_size, jobs=args.jobs, seed=args.seed, case_filter=args.id)
    if args.n is not None:
        report = [r for r in report if r["params"].get("n") == args.n]
    if args.k is not None:
        report = [r for r in report if r["params"].get("k") == args.k]
    _emit(report, args.format, out)
    return 1 if gating_failures(report) else 0


def build_parser():
    p = argparse.ArgumentParser(prog="tsscpp", description="Exact enumeration, Pfaffians and constant terms "
                                "for restricted column-strict plane partitions.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pfaffian", help="Pfaffian of a JSON skew matrix")
    s.add_argument("file", nargs="?", help="JSON file (default: stdin)")
    s.add_argument("--matrix", help="JSON matrix given inline")
    s.set_defaults(func=cmd_pfaffian)

    s = sub.add_parser("matrix", help="print a named matrix as JSON")
    s.add_argument("--kind", required=True,
                   choices=list(SKEW_KINDS) + ["B", "B_t", "B_tu", "B_trunc"] + list(M_KINDS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--N", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--t", default="t", help="parameter of the skew families (name, number or polynomial)")
    s.add_argument("--eps", default="eps")
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("enumerate", help="list objects of a class")
    s.add_argument("--class", dest="cls", required=True, choices=["cspp", "tspp", "mt", "tsscpp"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--filter", help="rows_even, cols_even, rows:K, kxy:K,X,Y, kxy_image:K,X,Y (cspp); k:K (tspp, mt)")
    s.add_argument("--stats", action="store_true", help="statistics table instead of objects")
    s.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("gf", help="generating polynomial by brute force and/or block Pfaffian")
    s.add_argument("--weight", required=True, choices=list(KINDS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--N", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--method", choices=["brute", "pfaffian", "both"], default="pfaffian")
    s.set_defaults(func=cmd_gf)

    s = sub.add_parser("constterm", help="generating polynomial as a constant term")
    s.add_argument("--weight", required=True, choices=list(CT_KINDS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--k", type=int)
    s.add_argument("--D", type=int, help="uniform truncation cap")
    s.add_argument("--compare", choices=["pfaffian"])
    s.set_defaults(func=cmd_constterm)

    s = sub.add_parser("tables", help="reference number tables")
    s.add_argument("--family", required=True, choices=["asm", "asm2", "avs", "card"])
    s.add_argument("--max", type=int, default=6)
    s.add_argument("--format", choices=["json", "csv", "pretty"], default="csv")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("suite", nargs="?", default="all", choices=("all",) + SUITES)
    s.add_argument("--max-size", type=int, default=4, help="bound on n+m")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--id", help="keep only cases with this id")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValueError, IndexError, json.JSONDecodeError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
