import random

import pytest
from hypothesis import given, strategies as st

from tsscpp.exactmath import Poly, det, var

from tsscpp.pfaffian import (
    IndexSet,
    SkewMatrix,
    copfaffian_matrix,
    minor_summation_check,
    pfaffian,
    pfaffian_oracle,
    shuffle_sign,
    sub_pfaffian,
)
from tsscpp.structmat import build_b, build_skew, gf_block, index_set_of_partition

t = var("t")


def random_skew(rng, size, lo=-9, hi=9):
    return SkewMatrix.from_upper(size, lambda i, j: rng.randint(lo, hi))


skew_matrices = st.integers(1, 5).flatmap(
    lambda h: st.lists(st.integers(-6, 6), min_size=h * (2 * h - 1), max_size=h * (2 * h - 1)).map(
        lambda vals, h=h: SkewMatrix.from_upper(
            2 * h, lambda i, j, it=iter(vals): next(it))))


def test_size_two():
    assert pfaffian(SkewMatrix([[0, 5], [-5, 0]])) == 5


def test_empty_matrix():
    assert pfaffian(SkewMatrix([])) == 1
    assert pfaffian_oracle(SkewMatrix([])) == 1


def test_odd_size_is_zero():
    assert pfaffian(SkewMatrix.from_upper(3, lambda i, j: i + j)) == 0


def test_rank_one_products():
    xs = [var(f"x{i}") for i in range(1, 5)]
    ys = [var(f"y{i}") for i in range(1, 5)]
    a = SkewMatrix.from_upper(4, lambda i, j: xs[i - 1] * ys[j - 1])
    expected = xs[0] * xs[2] * ys[1] * ys[3]
    assert pfaffian(a) == expected
    assert pfaffian_oracle(a) == expected


def test_direct_sum():
    a, b = var("a"), var("b")
    m = SkewMatrix([[0, a, 0, 0], [-a, 0, 0, 0], [0, 0, 0, b], [0, 0, -b, 0]])
    assert pfaffian(m) == a * b


def test_alternating_ones():
    assert pfaffian(build_skew("Sbar", 4)) == 1


def test_refined_block_matrix():
    m = gf_block(build_b(3, 0, 2, "t"), build_skew("Sbar", 5))
    assert m.size == 8
    assert pfaffian(m) == Poly.parse("2 + 3*t + 2*t^2")
    assert pfaffian_oracle(m) == pfaffian(m)


def test_oracle_refuses_large():
    with pytest.raises(ValueError):
        pfaffian_oracle(SkewMatrix.from_upper(14, lambda i, j: 1))


def test_rejects_non_skew():
    with pytest.raises(ValueError):
        SkewMatrix([[0, 1], [1, 0]])


def test_sub_pfaffian_closed_forms():
    lam = index_set_of_partition((2, 1), 2, 6)
    assert sub_pfaffian(build_skew("Sbar", 6), lam.complement()) == -1
    assert sub_pfaffian(build_skew("C", 4), index_set_of_partition((1,), 2, 4)) == t
    assert sub_pfaffian(build_skew("R", 6), index_set_of_partition((2, 2), 2, 6)) == 1


def test_sub_pfaffian_index_range():
    with pytest.raises(IndexError):
        sub_pfaffian(build_skew("S", 4), (1, 5))


def test_shuffle_sign_examples():
    assert shuffle_sign((1, 2), 4) == 1
    assert shuffle_sign(index_set_of_partition((4, 3, 1), 4, 8), 8) == 1
    # the partition (1) sits on {1, 3}: one merge inversion
    assert shuffle_sign(index_set_of_partition((1,), 2, 4), 4) == -1
    assert shuffle_sign((1, 4), 4) == 1


def test_index_set_validation():
    with pytest.raises(ValueError):
        IndexSet((2, 1), 4)
    with pytest.raises(ValueError):
        IndexSet((1, 5), 4)


def test_copfaffian_of_all_ones():
    assert copfaffian_matrix(build_skew("S", 4)) == build_skew("Sbar", 4)
    a = var("a")
    assert copfaffian_matrix(SkewMatrix([[0, a], [-a, 0]])) == SkewMatrix([[0, 1], [-1, 0]])


def test_double_copfaffian():
    rng = random.Random(3)
    a = random_skew(rng, 6)
    assert copfaffian_matrix(copfaffian_matrix(a)) == a.scale(pfaffian(a))


def test_minor_summation_square_case():
    tm = [[1, 2], [3, 4]]
    r = minor_summation_check(tm, build_skew("Sbar", 2))
    assert r["match"] and r["lhs"] == det(tm)


def test_minor_summation_with_alternating_ones():
    rng = random.Random(7)
    tm = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(2)]
    assert minor_summation_check(tm, build_skew("Sbar", 4))["match"]


def test_minor_summation_symbolic():
    x1, x2 = var("x1"), var("x2")
    tm = [[x ** j for j in range(4)] for x in (x1, x2)]
    r = minor_summation_check(tm, build_skew("Sbar", 4))
    assert r["match"] and isinstance(r["lhs"], Poly)


@given(skew_matrices)
def test_elimination_matches_matching_expansion(a):
    p = pfaffian(a)
    assert p == pfaffian_oracle(a)
    assert p * p == det([list(r) for r in a.rows])


@given(skew_matrices, st.integers(-3, 3))
def test_pfaffian_is_homogeneous(a, c):
    assert pfaffian(a.scale(c)) == c ** (a.size // 2) * pfaffian(a)


@given(st.integers(0, 10_000))
def test_minor_summation_random(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 3)
    n = m + rng.randint(0, 5 - m)
    tm = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
    assert minor_summation_check(tm, random_skew(rng, n, -3, 3))["match"]


def test_polynomial_entries_by_interpolation():
    a = build_skew("C", 6)
    assert pfaffian(a) == pfaffian_oracle(a)
