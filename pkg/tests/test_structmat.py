import pytest
from hypothesis import given, strategies as st

from tsscpp.exactmath import Poly, binom, var
from tsscpp.structmat import (
    SKEW_KINDS,
    build_b,
    build_b_truncated,
    build_m_matrix,
    build_skew,
    default_N,
    index_set_of_partition,
    matrix_strings,
    odd_columns,
    odd_rows,
    partition_sub_pfaffian,
    partition_sub_pfaffian_expected,
    partitions_in_box,
    qbinom_neg1,
)

t = var("t")


def strings(text_rows):
    return [[str(Poly.parse(x)) for x in r] for r in text_rows]


def test_doubly_refined_b_matrix():
    assert matrix_strings(build_b(3, 0, 2, "tu")) == [
        ["1", "0", "0", "0", "0"],
        ["0", "1", "t*u", "0", "0"],
        ["0", "0", "1", "t + u", "t*u"],
    ]


@pytest.mark.parametrize("n,m,N", [(3, 0, 2), (2, 2, 4), (4, 1, 4)])
def test_plain_b_is_binomial(n, m, N):
    b = build_b(n, m, N, "plain")
    for i in range(n):
        for j in range(n + N):
            assert b[i][j] == binom(i + m, j - i)


@pytest.mark.parametrize("n,m,N", [(3, 0, 2), (2, 2, 4), (4, 1, 4)])
def test_refined_b_at_one_is_plain(n, m, N):
    tb = build_b(n, m, N, "t")
    plain = build_b(n, m, N, "plain")
    assert [[Poly.coerce(x).substitute({"t": 1}) for x in r] for r in tb] == [list(r) for r in plain]


def test_truncated_b():
    full = build_b(3, 0, 2, "t")
    assert build_b_truncated(3, 0, 2, 2) == full
    cut = build_b_truncated(3, 0, 2, 1)
    assert all(r[j] == 0 for r in cut for j in range(4, 5))
    assert all(r[j] == full[i][j] for i, r in enumerate(cut) for j in range(4))
    with pytest.raises(ValueError):
        build_b_truncated(3, 0, 2, 3)


def test_printed_four_by_four_families():
    assert build_skew("R", 4).to_strings() == strings(
        [["0", "1", "t", "1"], ["-1", "0", "t^2", "t"], ["-t", "-t^2", "0", "1"], ["-1", "-t", "-1", "0"]])
    assert build_skew("C", 4).to_strings() == strings(
        [["0", "1", "t", "t^2"], ["-1", "0", "1", "t"], ["-t", "-1", "0", "1"], ["-t^2", "-t", "-1", "0"]])


def test_printed_eps_matrices():
    e = "eps"
    one = [
        ["0", e, "-" + e, "1", "-1", "1"],
        ["-" + e, "0", e, "-1", "1", "-1"],
        [e, "-" + e, "0", "1", "-1", "1"],
        ["-1", "1", "-1", "0", "1", "-1"],
        ["1", "-1", "1", "-1", "0", "1"],
        ["-1", "1", "-1", "1", "-1", "0"],
    ]
    two = [
        ["0", e, "-" + e, e, "-" + e, e],
        ["-" + e, "0", e, "-" + e, e, "-" + e],
        [e, "-" + e, "0", e, "-" + e, e],
        ["-" + e, e, "-" + e, "0", e, "-" + e],
        [e, "-" + e, e, "-" + e, "0", "1"],
        ["-" + e, e, "-" + e, e, "-1", "0"],
    ]
    assert build_skew("Lbar", 6, m=2, k=1).to_strings() == strings(one)
    assert build_skew("Lbar", 6, m=2, k=2).to_strings() == strings(two)


def test_alternating_sign_entries():
    a = build_skew("Sbar", 7)
    for i in range(1, 8):
        for j in range(i + 1, 8):
            assert a[i - 1, j - 1] == (-1) ** (j - i - 1)


def test_specialised_families_at_zero():
    assert build_skew("Rbar", 4, t=0).to_strings() == strings(
        [["0", "1", "0", "0"], ["-1", "0", "1", "0"], ["0", "-1", "0", "1"], ["0", "0", "-1", "0"]])


def test_skew_validation():
    with pytest.raises(ValueError):
        build_skew("Q", 4)
    with pytest.raises(ValueError):
        build_skew("L", 4)
    with pytest.raises(ValueError):
        build_skew("Lbar", 4, m=2, k=3)


def test_qbinom_at_minus_one():
    assert qbinom_neg1(4, 2) == 2
    assert qbinom_neg1(4, 1) == 0
    assert qbinom_neg1(5, 2) == binom(2, 1)


@pytest.mark.parametrize("n,m", [(2, 1), (3, 1), (4, 0), (2, 3)])
def test_signed_matrices_agree_at_one(n, m):
    N = default_N(n, m)
    base = build_m_matrix("neg1", n, m, N)
    for kind in ("neg1_u1", "neg1_usat"):
        other = build_m_matrix(kind, n, m, N, t=1)
        assert all(abs(x) == abs(y) for r, s in zip(base, other) for x, y in zip(r, s))


def test_index_sets():
    assert tuple(index_set_of_partition((4, 3, 1), 4)) == (1, 3, 6, 8)
    assert tuple(index_set_of_partition((), 3)) == (1, 2, 3)
    assert tuple(index_set_of_partition((1,), 2)) == (1, 3)
    with pytest.raises(ValueError):
        index_set_of_partition((1, 1, 1), 2)


def test_odd_rows_and_columns():
    assert odd_rows((3, 2, 1)) == 2
    assert odd_columns((3, 2, 1)) == 2
    assert odd_columns((2, 2)) == 0
    assert odd_rows(()) == odd_columns(()) == 0


def test_default_N():
    assert default_N(3, 0) == 2
    assert default_N(2, 2) == 4
    assert default_N(2, 0, 3) == 4


@pytest.mark.parametrize("kind,m", [(k, m) for k in SKEW_KINDS for m in (2, 3, 4)])
def test_partition_sub_pfaffians(kind, m):
    for n in range(m, 9):
        if (n - m if kind.endswith("bar") else m) % 2:
            continue
        ks = range(n - m + 1) if kind in ("L", "Lbar") else [None]
        for lam in partitions_in_box(m, n - m):
            for k in ks:
                assert partition_sub_pfaffian(kind, n, m, lam, k=k) == \
                    partition_sub_pfaffian_expected(kind, n, m, lam, k=k), (kind, n, m, lam, k)


@given(st.lists(st.integers(0, 6), max_size=5))
def test_index_set_is_strictly_increasing(parts):
    lam = tuple(sorted((p for p in parts if p), reverse=True))
    m = max(len(lam), 1)
    I = tuple(index_set_of_partition(lam, m))
    assert all(a < b for a, b in zip(I, I[1:]))
    assert sum(I) - m * (m + 1) // 2 == sum(lam)


@given(st.integers(1, 4), st.integers(0, 3))
def test_partitions_in_box_count(rows, cols):
    assert len(list(partitions_in_box(rows, cols))) == binom(rows + cols, rows)
