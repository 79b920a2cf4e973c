from math import comb

import pytest
from hypothesis import given, strategies as st

from tsscpp.exactmath import Poly
from tsscpp.refnum import (
    asm_doubly,
    asm_doubly_poly,
    asm_number,
    asm_poly,
    asm_refined,
    avs_number,
    avs_number_alt,
    avs_poly,
    avs_refined,
    card_cspp,
    conj_neg1_target,
    conj_row_target,
    even_row_target,
    gaussian_binomial,
    h_row,
    vr_polynomials,
)

P = Poly.parse


def test_asm_numbers():
    assert [asm_number(n) for n in range(1, 8)] == [1, 2, 7, 42, 429, 7436, 218348]
    assert asm_poly(3) == P("2+3*t+2*t^2")
    assert asm_poly(4) == P("7+14*t+14*t^2+7*t^3")


def test_doubly_refined_tables():
    assert asm_doubly(3) == ((0, 1, 1), (1, 1, 1), (1, 1, 0))
    assert asm_doubly(4) == ((0, 2, 3, 2), (2, 4, 5, 3), (3, 5, 4, 2), (2, 3, 2, 0))
    assert asm_doubly_poly(3) == P("1+t+u+t*u+t^2*u+t*u^2+t^2*u^2")


@pytest.mark.parametrize("n", range(2, 8))
def test_doubly_refined_margins(n):
    a = asm_doubly(n)
    for k in range(n):
        assert sum(a[k]) == asm_refined(n, k + 1)


def test_vertically_symmetric_numbers():
    assert [avs_number(2 * n + 1) for n in range(1, 6)] == [1, 3, 26, 646, 45885]
    assert avs_poly(5) == P("1+t+t^2")
    assert avs_poly(7) == P("3+6*t+8*t^2+6*t^3+3*t^4")


@pytest.mark.parametrize("odd", [3, 5, 7, 9, 11])
def test_vertically_symmetric_sums(odd):
    assert avs_number_alt(odd) == avs_number(odd)
    assert sum(avs_refined(odd, r) for r in range(1, odd)) == avs_number(odd)


def test_product_formula():
    assert card_cspp(3, 0) == 7
    assert card_cspp(1, 2) == 4
    for n in range(1, 7):
        assert card_cspp(n, 0) == asm_number(n)


def test_row_even_targets():
    assert conj_row_target(1, 1, 6) == 3432
    assert conj_row_target(2, 1, 6) == 65934024
    assert [h_row(4, n) for n in range(3)] == [132, 275, 470]


def test_signed_targets_live_on_even_sizes():
    assert [conj_neg1_target(n) for n in range(0, 11, 2)] == [1, 1, 4, 50, 1862, 202860]
    assert all(conj_neg1_target(n) == 0 for n in range(1, 11, 2))


def test_even_row_target():
    assert even_row_target(3) == P("1+t+t^2")


def test_printed_parity_relations():
    p = vr_polynomials()
    t = Poly.var("t")
    assert p[4] == 3 * (t + 1) * p[3]
    assert p[2] == 1 + t


def test_gaussian_binomial():
    assert gaussian_binomial(4, 2) == P("1+q+2*q^2+q^3+q^4")
    assert gaussian_binomial(3, 5) == 0


def test_range_errors():
    for bad in (lambda: asm_refined(3, 4), lambda: asm_doubly(1), lambda: avs_number(4),
                lambda: card_cspp(0, 1), lambda: h_row(10, 1), lambda: even_row_target(0)):
        with pytest.raises(ValueError):
            bad()


@given(st.integers(2, 9))
def test_refined_recurrence_and_symmetry(n):
    assert asm_refined(n, 1) == asm_number(n - 1)
    assert sum(asm_refined(n, r) for r in range(1, n + 1)) == asm_number(n)
    assert all(asm_refined(n, r) == asm_refined(n, n + 1 - r) for r in range(1, n + 1))


@given(st.integers(1, 6), st.integers(0, 6))
def test_gaussian_binomial_at_one(n, r):
    assert gaussian_binomial(n, r).substitute({"q": 1}) == (comb(n, r) if r <= n else 0)
