import pytest
from hypothesis import given, strategies as st

from tsscpp.exactmath import Poly, var
from tsscpp.genfun import (
    KINDS,
    GfRequest,
    gf_brute,
    gf_general,
    gf_general_brute,
    gf_lattice_sum,
    gf_mt,
    gf_mt_prelimit,
    gf_pfaffian,
    lattice_determinant,
)
from tsscpp.ppart import enumerate_cspp
from tsscpp.refnum import card_cspp, signed_vc_polynomials, vr_polynomials
from tsscpp.structmat import build_skew, default_N

P = Poly.parse
t = var("t")


def grid(size):
    return [(n, m) for n in range(1, size + 1) for m in range(0, size + 1 - n)]


def test_refined_example():
    req = GfRequest(3, 0, "refined", N=2)
    assert gf_pfaffian(req) == gf_brute(req) == P("2+3*t+2*t^2")


def test_doubly_refined_example():
    req = GfRequest(3, 0, "doubly", r=2)
    assert gf_pfaffian(req) == gf_brute(req)


def test_row_even_example():
    assert gf_pfaffian(GfRequest(3, 0, "rows_even")) == P("1+t+t^2")


def test_bounded_rows_prelimit_and_limit():
    assert gf_mt_prelimit(3, 0, 2, 1) == P("(t^2+2*t+2)+(t^2+t)*eps")
    assert gf_mt(3, 0, 2, 1) == P("t^2+2*t+2")
    assert gf_mt(3, 0, 2, 0) == 1
    assert gf_mt(3, 0, 2, 1, variant="truncated") == P("t^2+2*t+2")


def test_column_parity_weight_pairs_with_row_parity_matrix():
    # the column-parity statistic needs the row-parity skew matrix and vice versa
    for n in range(1, 5):
        assert gf_pfaffian(GfRequest(n, 0, "vc")) == gf_brute(GfRequest(n, 0, "vc"))
        assert KINDS["vc"].a_kind == "Rbar" and KINDS["vr"].a_kind == "Cbar"
    assert gf_brute(GfRequest(3, 0, "vc")) == P("2+3*t+2*t^2")


def test_request_validation():
    with pytest.raises(ValueError):
        GfRequest(3, 0, "nope")
    with pytest.raises(ValueError):
        GfRequest(3, 0, "mt")
    with pytest.raises(ValueError):
        GfRequest(3, 0, "refined", N=3)
    with pytest.raises(ValueError):
        GfRequest(1, 0, "doubly")
    with pytest.raises(ValueError):
        GfRequest(3, 0, "refined", r=4)


@pytest.mark.parametrize("kind", list(KINDS))
def test_every_kind_matches_brute_force(kind):
    for n, m in grid(3):
        if KINDS[kind].r_min == 2 and n + m < 2:
            continue
        for k in (range(n + m) if kind == "mt" else [None]):
            rhs = gf_pfaffian(GfRequest(n, m, kind, k=k))
            rs = range(KINDS[kind].r_min, n + m + 1) if "Ubar*" in str(KINDS[kind].stats) else [None]
            for r in rs:
                assert gf_brute(GfRequest(n, m, kind, k=k, r=r)) == rhs, (kind, n, m, k, r)


@pytest.mark.parametrize("kind", ["refined", "doubly", "vc", "neg1", "mt"])
def test_larger_N_is_stable(kind):
    n, m = 2, 1
    for k in ([1, 2] if kind == "mt" else [None]):
        N = default_N(n, m, k or 0)
        assert gf_pfaffian(GfRequest(n, m, kind, N=N, k=k)) == gf_pfaffian(GfRequest(n, m, kind, N=N + 2, k=k))


def test_lattice_determinants():
    ones = [1] * 3
    assert lattice_determinant((), 3, 0, ones, ones) == 1
    assert lattice_determinant((1,), 3, 0, ones, ones) == 2
    assert gf_lattice_sum(3, 0, ones, ones) == 7


@pytest.mark.parametrize("n,m", [(2, 1), (1, 2), (3, 0)])
def test_general_weights(n, m):
    K = n + m
    ones = [1] * K
    N = default_N(n, m)
    sbar = build_skew("Sbar", n + N)
    assert gf_general(n, m, N, sbar, ones, ones) == card_cspp(n, m)
    tv = [t] + [1] * (K - 1)
    assert gf_general(n, m, N, sbar, tv, ones) == gf_pfaffian(GfRequest(n, m, "refined", r=1))
    tv = [var(f"t{i}") for i in range(1, K + 1)]
    xv = [var(f"x{i}") for i in range(1, K + 1)]
    for kind in ("Sbar", "Rbar", "Cbar"):
        a = build_skew(kind, n + N, t="s")
        assert gf_general(n, m, N, a, tv, xv) == gf_general_brute(n, m, N, a, tv, xv)


def test_general_row_parity_matrix_counts_column_parity():
    n, m = 3, 0
    N = default_N(n, m)
    s = var("s")
    lhs = gf_general(n, m, N, build_skew("Rbar", n + N, t=s), [t, 1, 1], [1, 1, 1])
    rhs = gf_brute(GfRequest(n, m, "refined_vc", r=1)).substitute({"u": s})
    assert lhs == rhs


def test_row_parity_polynomials():
    printed = vr_polynomials()
    for n in range(1, 6):
        assert gf_pfaffian(GfRequest(n, 0, "vr")) == printed[n]


def test_row_parity_sixth_polynomial_corrected_relation():
    p5 = vr_polynomials()[5]
    p6 = gf_pfaffian(GfRequest(6, 0, "vr"))
    assert p6 == P("676+2028*t+2496*t^2+1612*t^3+546*t^4+78*t^5")
    assert 3 * p6 == 26 * (t + 1) * p5


def test_signed_column_parity_sign_pattern():
    printed = signed_vc_polynomials()
    for n in range(1, 7):
        assert gf_pfaffian(GfRequest(n, 0, "neg1_vc")) == (-1) ** (n + 1) * printed[n]


@given(st.sampled_from(grid(4)))
def test_count_at_one(nm):
    n, m = nm
    assert gf_pfaffian(GfRequest(n, m, "refined")).substitute({"t": 1}) == card_cspp(n, m)


@given(st.sampled_from(grid(4)), st.data())
def test_refinements_are_symmetric_in_degree(nm, data):
    n, m = nm
    r = data.draw(st.integers(1, n + m))
    p = gf_brute(GfRequest(n, m, "refined", r=r))
    assert p == gf_pfaffian(GfRequest(n, m, "refined"))
    assert p.degree("t") <= n + m - 1


@given(st.sampled_from(grid(4)))
def test_signed_count_parity(nm):
    n, m = nm
    signed = gf_pfaffian(GfRequest(n, m, "neg1"))
    total = len(enumerate_cspp(n, m))
    assert signed == gf_brute(GfRequest(n, m, "neg1"))
    assert (signed.constant_value() + total) % 2 == 0
