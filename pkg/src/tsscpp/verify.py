"""Verification cases grouped into suites.

Every case compares two independently computed values and reports
{"case", "kind", "params", "lhs", "rhs", "match", "method_lhs", "method_rhs"}.
``kind`` is "theorem" for proved identities (these gate the exit code),
"conjecture" for open statements and "observation" for printed claims
that are checked but known to need a correction.
"""

import random
from concurrent.futures import ProcessPoolExecutor

from .constterm import (
    CT_KINDS,
    CtRequest,
    constant_term,
    constant_term_with,
    d_sum,
    f_a_series,
    needed_caps,
    zeilberger_minor_sum,
)
from .exactmath import Poly, det
from .genfun import KINDS, GfRequest, gf_brute, gf_general, gf_general_brute, gf_mt_prelimit, gf_pfaffian
from .pfaffian import SkewMatrix, minor_summation_check, pfaffian, pfaffian_oracle
from .ppart import (
    at_most_k_rows,
    cspp_kxy,
    cspp_kxy_image,
    cspp_to_tspp,
    cspp_to_tsscpp,
    cube_moves,
    enumerate_cspp,
    enumerate_tspp,
    moves,
    mt_polynomial,
    mt_subset_kxy,
    subset_filter,
    tspp_k,
    tspp_kxy,
    tspp_to_cspp,
    tsscpp_moves,
    tsscpp_to_cspp,
    tsscpp_to_tspp,
    u_stat,
    ubar,
)
from .refnum import (
    asm_doubly,
    asm_doubly_poly,
    asm_poly,
    avs_number,
    card_cspp,
    conj_neg1_target,
    conj_row_target,
    even_row_target,
    signed_vc_polynomials,
    vr_polynomials,
)
from .structmat import (
    build_skew,
    default_N,
    partition_sub_pfaffian,
    partition_sub_pfaffian_expected,
    partitions_in_box,
)

SUITES = ("bijections", "statistics", "pfaffian-core", "genfun", "constterm", "conjectures")
T = Poly.var("t")
U = Poly.var("u")


def _case(case, kind, params, lhs, rhs, method_lhs, method_rhs, match=None):
    return {
        "case": case,
        "kind": kind,
        "params": params,
        "lhs": str(lhs),
        "rhs": str(rhs),
        "match": bool(lhs == rhs) if match is None else bool(match),
        "method_lhs": method_lhs,
        "method_rhs": method_rhs,
    }


def _grid(max_size, n_min=1):
    return [(n, m) for n in range(n_min, max_size + 1) for m in range(0, max_size - n + 1)]


def _tpoly(values):
    return sum((T ** v for v in values), Poly())


# ---------------------------------------------------------------- case bodies

def c_bij_tspp(n, m):
    cs = enumerate_cspp(n, m)
    ts = enumerate_tspp(n, m)
    ok = 0
    for c in cs:
        b = cspp_to_tspp(c)
        K = n + m
        if tspp_to_cspp(b) == c and all(ubar(c, r) == K - 1 - u_stat(b, r) for r in range(1, K + 1)):
            ok += 1
    images = {cspp_to_tspp(c).rows for c in cs}
    match = ok == len(cs) and images == {b.rows for b in ts}
    return _case("bij-tspp", "theorem", {"n": n, "m": m}, ok, len(cs),
                 "round trip and Ubar transport", "enumerate_cspp", match)


def c_bij_tsscpp(n, m):
    cs = enumerate_cspp(n, m)
    ok = 0
    for c in cs:
        a = cspp_to_tsscpp(c)
        if a.is_valid() and tsscpp_to_cspp(a) == c and tsscpp_to_tspp(a) == cspp_to_tspp(c):
            ok += 1
    return _case("bij-tsscpp", "theorem", {"n": n, "m": m}, ok, len(cs),
                 "cube round trip", "enumerate_cspp")


def c_count(n, m):
    return _case("count-cspp", "theorem", {"n": n, "m": m}, len(enumerate_cspp(n, m)), card_cspp(n, m),
                 "enumerate_cspp", "product formula")


def c_count_tspp(n, m):
    return _case("count-tspp", "theorem", {"n": n, "m": m}, len(enumerate_tspp(n, m)), card_cspp(n, m),
                 "enumerate_tspp", "product formula")


def c_rows_k(n, m, k, r):
    cs = subset_filter(enumerate_cspp(n, m), at_most_k_rows(k))
    ts = subset_filter(enumerate_tspp(n, m), tspp_k(k))
    lhs = _tpoly(ubar(c, r) for c in cs)
    rhs = _tpoly(n + m - 1 - u_stat(b, r) for b in ts)
    images = sorted(cspp_to_tspp(c).rows for c in cs) == sorted(b.rows for b in ts)
    return _case("rows-k", "theorem", {"n": n, "m": m, "k": k, "r": r}, lhs, rhs,
                 "CSPP with at most k rows", "TSPP with k free columns", lhs == rhs and images)


def _kxy_table(n, m, pred_factory):
    K = n + m
    table = {}
    for k in range(K):
        for x in range(K + 1):
            for y in range(K + 1):
                v = len(subset_filter(enumerate_cspp(n, m), pred_factory(k, x, y)))
                w = len(subset_filter(enumerate_tspp(n, m), tspp_kxy(k, x, y)))
                if v or w:
                    table[(k, x, y)] = (v, w)
    return table


def c_kxy_image(n, m):
    table = _kxy_table(n, m, cspp_kxy_image)
    bad = {str(k): v for k, v in table.items() if v[0] != v[1]}
    return _case("kxy-image", "theorem", {"n": n, "m": m}, len(table) - len(bad), len(table),
                 "classes matching TSPP (largest part of row k)", "TSPP (k,x,y) classes")


def c_kxy_literal(n, m):
    table = _kxy_table(n, m, cspp_kxy)
    bad = sum(1 for v in table.values() if v[0] != v[1])
    return _case("kxy-literal", "observation", {"n": n, "m": m}, len(table) - bad, len(table),
                 "classes matching TSPP (length of row k)", "TSPP (k,x,y) classes")


def c_moves(n, m):
    cs = enumerate_cspp(n, m)
    cube = sum(1 for c in cs if tsscpp_moves(cspp_to_tsscpp(c)) == cube_moves(c))
    stated = sum(1 for c in cs if tsscpp_moves(cspp_to_tsscpp(c)) == moves(c))
    return [
        _case("moves-cube", "theorem", {"n": n, "m": m}, cube, len(cs),
              "cube orbit count = (0, parts, |c|-parts)", "enumerate_cspp"),
        _case("moves-profile", "observation", {"n": n, "m": m}, stated, len(cs),
              "cube orbit count = (0, profile, |c|-profile)", "enumerate_cspp"),
    ]


def c_pfaffian_random(seed, count):
    rng = random.Random(seed)
    ok = 0
    for _ in range(count):
        size = rng.randint(1, 5) * 2
        a = SkewMatrix.from_upper(size, lambda i, j: rng.randint(-9, 9))
        p = pfaffian(a)
        if p == pfaffian_oracle(a) and p * p == det([list(r) for r in a.rows]):
            ok += 1
    return _case("pfaffian-oracle", "theorem", {"seed": seed, "count": count}, ok, count,
                 "elimination (and Pf^2 = det)", "matching expansion")


def c_minor_summation(seed, count):
    rng = random.Random(seed)
    ok = 0
    for _ in range(count):
        m = rng.randint(1, 4)
        n = m + rng.randint(0, 8 - m)
        t = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        b = SkewMatrix.from_upper(n, lambda i, j: rng.randint(-3, 3))
        ok += minor_summation_check(t, b)["match"]
    return _case("minor-summation", "theorem", {"seed": seed, "count": count}, ok, count,
                 "subset sums", "block Pfaffian and T B T^t forms")


def c_sub_pfaffians(n_max, m_max):
    total = ok = 0
    for n in range(1, n_max + 1):
        for m in range(1, min(n, m_max) + 1):
            kinds = []
            if m % 2 == 0:
                kinds += ["S", "R", "C", "L"]
            if (n - m) % 2 == 0:
                kinds += ["Sbar", "Rbar", "Cbar", "Lbar"]
            for lam in partitions_in_box(m, n - m):
                for kind in kinds:
                    for k in (range(n - m + 1) if kind in ("L", "Lbar") else [None]):
                        total += 1
                        ok += partition_sub_pfaffian(kind, n, m, lam, k=k) == \
                            partition_sub_pfaffian_expected(kind, n, m, lam, k=k)
    return _case("sub-pfaffians", "theorem", {"n_max": n_max, "m_max": m_max}, ok, total,
                 "sub-Pfaffian on I_m(lambda)", "closed form")


def _rs(kind, n, m):
    w = KINDS[kind]
    if any(s.startswith("Ubar*") for s, _ in w.stats):
        return list(range(w.r_min, n + m + 1))
    return [None]


def c_gf(kind, n, m, k=None):
    out = []
    rhs = gf_pfaffian(GfRequest(n, m, kind, k=k))
    for r in _rs(kind, n, m):
        lhs = gf_brute(GfRequest(n, m, kind, k=k, r=r))
        params = {"weight": kind, "n": n, "m": m}
        if k is not None:
            params["k"] = k
        if r is not None:
            params["r"] = r
        out.append(_case("gf", "theorem", params, lhs, rhs, "brute force", "block Pfaffian"))
    return out


def c_gf_stable(kind, n, m, k=None):
    N = default_N(n, m, k or 0)
    a = gf_pfaffian(GfRequest(n, m, kind, N=N, k=k))
    b = gf_pfaffian(GfRequest(n, m, kind, N=N + 2, k=k))
    params = {"weight": kind, "n": n, "m": m, "N": N}
    if k is not None:
        params["k"] = k
    return _case("gf-stable-N", "theorem", params, a, b, f"N={N}", f"N={N + 2}")


def c_gf_general(n, m, kind):
    K = n + m
    tv = [Poly.var(f"t{i}") for i in range(1, K + 1)]
    xv = [Poly.var(f"x{i}") for i in range(1, K + 1)]
    N = default_N(n, m)
    a = build_skew(kind, n + N)
    return _case("gf-general", "theorem", {"n": n, "m": m, "A": kind},
                 gf_general(n, m, N, a, tv, xv), gf_general_brute(n, m, N, a, tv, xv),
                 "block Pfaffian", "signed sub-Pfaffian sum over CSPP")


def c_ct(kind, n, m, k=None):
    params = {"weight": kind, "n": n, "m": m}
    if k is not None:
        params["k"] = k
    return _case("constant-term", "theorem", params, constant_term(CtRequest(n, m, kind, k=k)),
                 gf_pfaffian(GfRequest(n, m, kind, k=k)), "constant term", "block Pfaffian")


# skew kind and parameter -> closed form F
_DSUM_F = {("Sbar", None): ("Sbar", None), ("Rbar", 0): ("Rbar", None), ("Cbar", 0): ("Cbar", None),
           ("Rbar", "s"): ("Rbar_t", "s"), ("Cbar", "s"): ("Cbar_t", "s")}


def c_dsum(n, m, kind, param):
    N = default_N(n, m)
    a = build_skew(kind, n + N) if param is None else build_skew(kind, n + N, t=param)
    fk, fv = _DSUM_F[(kind, param)]
    f = f_a_series(fk, n, needed_caps(n, m), t=fv or "t")
    return _case("dsum-ct", "theorem", {"n": n, "m": m, "A": kind, "param": param},
                 d_sum(n, m, N, a), constant_term_with(n, m, f, T, U),
                 "signed sub-Pfaffian/minor sum", "constant term")


def c_zeilberger(n, m):
    return _case("zeilberger", "theorem", {"n": n, "m": m}, zeilberger_minor_sum(n, m), card_cspp(n, m),
                 "sum of maximal minors", "product formula")


def c_conj_refined(n):
    return _case("conj-refined", "conjecture", {"n": n}, gf_brute(GfRequest(n, 0, "refined")), asm_poly(n),
                 "brute force t^Ubar_1", "A_n(t)")


def c_conj_doubly(n):
    lhs = gf_brute(GfRequest(n, 0, "doubly", r=2))
    a = asm_doubly(n)
    alt = sum((a[k][l] * T ** k * U ** l for k in range(n) for l in range(n) if a[k][l]), Poly())
    return [
        _case("conj-doubly", "conjecture", {"n": n, "orientation": "u^(n-l)"}, lhs, asm_doubly_poly(n),
              "brute force t^Ubar_1 u^Ubar_2", "sum A_n^{k,l} t^(k-1) u^(n-l)"),
        _case("conj-doubly", "conjecture", {"n": n, "orientation": "u^(l-1)"}, lhs, alt,
              "brute force t^Ubar_1 u^Ubar_2", "sum A_n^{k,l} t^(k-1) u^(l-1)"),
    ]


def c_conj_mt(n, k):
    lhs = gf_brute(GfRequest(n, 0, "mt", k=k))
    return _case("conj-mt", "conjecture", {"n": n, "k": k}, lhs, mt_polynomial(n, k),
                 "brute force over CSPP with at most k rows", "M_n^k(t)")


def c_conj_mt_kxy(n):
    good = total = 0
    for k in range(n):
        for x in range(n + 1):
            for y in range(n + 1):
                v = len(subset_filter(enumerate_tspp(n, 0), tspp_kxy(k, x, y)))
                w = len(mt_subset_kxy(n, k, x, y))
                if v or w:
                    total += 1
                    good += v == w
    return _case("conj-mt-kxy", "conjecture", {"n": n}, good, total,
                 "TSPP (k,x,y) classes equal to MT classes", "MT (k,x,y) classes")


def c_conj_even_row(n):
    return _case("conj-even-row", "conjecture", {"n": n}, gf_pfaffian(GfRequest(n, 0, "rows_even")),
                 even_row_target(n), "row-even gf (Pfaffian)", "A^VS product")


def c_neg1_avs(n):
    lhs = gf_pfaffian(GfRequest(n, 0, "neg1"))
    rhs = avs_number(n + 2) if n % 2 else 0
    alt = avs_number(n) if n % 2 else 0
    out = [_case("neg1-avs", "observation", {"n": n, "target": "A^VS_(n+2)"}, lhs, rhs,
                 "signed count (Pfaffian)", "A^VS_(n+2) for odd n, 0 otherwise")]
    out.append(_case("neg1-avs", "conjecture", {"n": n, "target": "A^VS_n"}, lhs, alt,
                     "signed count (Pfaffian)", "A^VS_n for odd n, 0 otherwise"))
    return out


def c_rcspp_count(n, r, m):
    size = 2 * n + r
    lhs = gf_pfaffian(GfRequest(size, m, "rows_even")).evaluate({"t": 1})
    return _case("conj-row-count", "conjecture", {"n": size, "m": m}, lhs, conj_row_target(n, r, m),
                 "row-even count (Pfaffian at t=1)", "closed-form product")


def c_conj_neg1_m2(n):
    lhs = gf_pfaffian(GfRequest(n, 2, "neg1"))
    return _case("conj-neg1-m2", "conjecture", {"n": n}, lhs, conj_neg1_target(n),
                 "signed count of CSPP(n,2) (Pfaffian)", "closed-form product")


def c_vr_poly(n):
    return _case("vr-poly", "observation", {"n": n}, gf_pfaffian(GfRequest(n, 0, "vr")), vr_polynomials()[n],
                 "t^VR gf (Pfaffian)", "printed polynomial")


def c_signed_vc(n):
    return _case("signed-vc", "observation", {"n": n}, gf_pfaffian(GfRequest(n, 0, "neg1_vc")),
                 signed_vc_polynomials()[n], "signed t^VC gf (Pfaffian)", "printed polynomial")


def c_mt_prelimit():
    return _case("mt-prelimit", "theorem", {"n": 3, "m": 0, "k": 1, "N": 4}, gf_mt_prelimit(3, 0, 4, 1),
                 Poly.parse("(t^2+2*t+2)+(t^2+t)*eps"), "eps-deformed block Pfaffian", "printed value")


# ---------------------------------------------------------------- suites

def suite_cases(suite, max_size=4, seed=0):
    """(function name, args) pairs in canonical order."""
    grid = _grid(max_size)
    cases = []
    if suite == "bijections":
        cases += [("c_bij_tspp", nm) for nm in grid]
        cases += [("c_bij_tsscpp", nm) for nm in grid if sum(nm) <= min(max_size, 4)]
    elif suite == "statistics":
        cases += [("c_count", nm) for nm in grid]
        cases += [("c_count_tspp", nm) for nm in grid]
        for n, m in grid:
            for k in range(n + m):
                cases += [("c_rows_k", (n, m, k, r)) for r in (1, n + m)]
        cases += [("c_kxy_image", nm) for nm in grid]
        cases += [("c_kxy_literal", nm) for nm in grid]
        cases += [("c_moves", nm) for nm in grid if sum(nm) <= min(max_size, 3)]
    elif suite == "pfaffian-core":
        cases += [("c_pfaffian_random", (seed, 200)), ("c_minor_summation", (seed, 50)),
                  ("c_sub_pfaffians", (8, 4))]
    elif suite == "genfun":
        for kind in KINDS:
            for n, m in grid:
                ks = range(n + m) if kind == "mt" else [None]
                for k in ks:
                    if KINDS[kind].r_min == 2 and n + m < 2:
                        continue
                    cases.append(("c_gf", (kind, n, m, k)))
                    cases.append(("c_gf_stable", (kind, n, m, k)))
        cases += [("c_gf_general", (n, m, a)) for n, m in grid if n + m <= 3 for a in ("Sbar", "Rbar", "Cbar")]
        cases.append(("c_mt_prelimit", ()))
    elif suite == "constterm":
        for kind in CT_KINDS:
            for n in range(1, min(max_size, 4) + 1):
                for m in range(0, 3):
                    if n + m > max_size:
                        continue
                    if kind in ("doubly", "doubly_cols_even") and n + m < 2:
                        continue
                    ks = range(n + m) if kind == "mt" else [None]
                    cases += [("c_ct", (kind, n, m, k)) for k in ks]
        for n in range(1, min(max_size, 3) + 1):
            for m in range(0, 3):
                if n + m <= max_size:
                    cases += [("c_dsum", (n, m) + key) for key in _DSUM_F]
                    cases.append(("c_zeilberger", (n, m)))
    elif suite == "conjectures":
        top = max(max_size, 5)
        cases += [("c_conj_refined", (n,)) for n in range(1, top + 1)]
        cases += [("c_conj_doubly", (n,)) for n in range(2, min(top, 5) + 1)]
        cases += [("c_conj_mt", (n, k)) for n in range(1, top + 1) for k in range(n)]
        cases += [("c_conj_mt_kxy", (n,)) for n in range(1, top + 1)]
        cases += [("c_conj_even_row", (n,)) for n in range(1, top + 1)]
        cases += [("c_neg1_avs", (n,)) for n in range(1, top + 1)]
        cases += [("c_rcspp_count", (1, 1, 6))]
        cases += [("c_conj_neg1_m2", (n,)) for n in range(1, 9)]
        cases += [("c_vr_poly", (n,)) for n in range(1, 7)]
        cases += [("c_signed_vc", (n,)) for n in range(1, 9)]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return cases


# case ids produced by each case function, used to skip work when filtering
CASE_IDS = {
    "c_bij_tspp": ("bij-tspp",), "c_bij_tsscpp": ("bij-tsscpp",), "c_count": ("count-cspp",),
    "c_count_tspp": ("count-tspp",), "c_rows_k": ("rows-k",), "c_kxy_image": ("kxy-image",),
    "c_kxy_literal": ("kxy-literal",), "c_moves": ("moves-cube", "moves-profile"),
    "c_pfaffian_random": ("pfaffian-oracle",), "c_minor_summation": ("minor-summation",),
    "c_sub_pfaffians": ("sub-pfaffians",), "c_gf": ("gf",), "c_gf_stable": ("gf-stable-N",),
    "c_gf_general": ("gf-general",), "c_ct": ("constant-term",), "c_dsum": ("dsum-ct",),
    "c_zeilberger": ("zeilberger",), "c_conj_refined": ("conj-refined",), "c_conj_doubly": ("conj-doubly",),
    "c_conj_mt": ("conj-mt",), "c_conj_mt_kxy": ("conj-mt-kxy",), "c_conj_even_row": ("conj-even-row",),
    "c_neg1_avs": ("neg1-avs",), "c_rcspp_count": ("conj-row-count",), "c_conj_neg1_m2": ("conj-neg1-m2",),
    "c_vr_poly": ("vr-poly",), "c_signed_vc": ("signed-vc",), "c_mt_prelimit": ("mt-prelimit",),
}


def run_case(spec):
    name, args = spec
    out = globals()[name](*args)
    return out if isinstance(out, list) else [out]


def run_suite(suite, max_size=4, jobs=1, seed=0, case_filter=None):
    cases = suite_cases(suite, max_size, seed)
    if case_filter:
        cases = [c for c in cases if case_filter in CASE_IDS[c[0]]]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_case, cases))
    else:
        results = [run_case(c) for c in cases]
    report = [r for group in results for r in group]
    if case_filter:
        report = [r for r in report if r["case"] == case_filter]
    return report


def gating_failures(report):
    return [r for r in report if r["kind"] == "theorem" and not r["match"]]
