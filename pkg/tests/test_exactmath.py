from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tsscpp.exactmath import Poly, det, det_bareiss, det_expand, det_fraction, interpolate, poly, var

t, u, eps = var("t"), var("u"), var("eps")

small = st.integers(-5, 5)
polys = st.lists(st.tuples(small, st.integers(0, 3), st.integers(0, 2)), max_size=5).map(
    lambda terms: sum((c * t ** a * u ** b for c, a, b in terms), Poly()))


def test_square_of_binomial():
    assert (t + 1) * (t + 1) == t ** 2 + 2 * t + 1


def test_product_of_linear_factors():
    assert (1 + t) * (1 + u) == poly("1 + t + u + t*u")


def test_additive_identity():
    p = poly("3 + t*u - eps")
    assert p + 0 == p


def test_substitute_examples():
    assert poly("1+t+t^2").substitute({"t": 1}) == 3
    assert (t * u).substitute({"u": 1}) == t
    assert poly("2+3*t+2*t^2").substitute({"t": -1}) == 1


def test_coefficient_extraction():
    p = poly("(t^2+2*t+2)+(t^2+t)*eps")
    assert p.coeff("eps", 1) == t ** 2 + t
    assert p.coeff("eps", 0) == t ** 2 + 2 * t + 2
    assert (t ** 3).coeff("t", 2) == 0
    q = poly("1 + t")
    assert q.coeff("eps", 0) == q


def test_display_order_and_parse_round_trip():
    p = poly("t*u + 2*t^2 + 3")
    assert str(p) == "3 + 2*t^2 + t*u"
    assert Poly.parse(str(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Poly.parse("t + import")


def test_interpolation_examples():
    assert interpolate([(0, 2), (1, 7), (-1, 1)]) == poly("2+3*t+2*t^2")
    assert interpolate([(0, 5)]) == 5
    assert interpolate([(0, 0), (1, 1), (2, 2)]) == t


def test_interpolation_rejects_non_integral():
    with pytest.raises(ArithmeticError):
        interpolate([(0, 0), (2, 1)])


def test_determinant_agrees_across_methods():
    rows = [[2, -1, 3], [0, 4, 1], [5, 2, -2]]
    assert det_bareiss(rows) == det_expand(rows) == det_fraction(rows) == -85
    assert det([[t, 1], [1, t]]) == t ** 2 - 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys)
def test_identity_substitution(p):
    assert p.substitute({"t": t, "u": u}) == p


@given(polys, small)
def test_substitution_is_a_homomorphism(p, x):
    q = p * (p + 1)
    assert q.substitute({"t": x}) == p.substitute({"t": x}) * (p.substitute({"t": x}) + 1)


@given(st.lists(small, min_size=1, max_size=6))
def test_interpolation_recovers_polynomial(cs):
    p = sum((c * t ** i for i, c in enumerate(cs)), Poly())
    pts = [(x, p.evaluate({"t": x})) for x in range(-3, -3 + len(cs))]
    assert interpolate(pts) == p


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_fraction_elimination(rows):
    assert det_bareiss(rows) == det_fraction(rows) == det_expand(rows)


def test_fraction_entries_normalise():
    assert Poly.coerce(Fraction(4, 2)) == 2
