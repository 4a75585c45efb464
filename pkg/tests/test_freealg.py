from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tripenv.freealg import AB, EMPTY, FreePoly, GeneratorSet, UsageError, deglex_cmp, deglex_key, find_factor

words = st.lists(st.integers(0, 1), max_size=6).map(tuple)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(words, coeffs, max_size=5).map(lambda d: FreePoly(AB, d))


def test_deglex_examples():
    a, b = (0,), (1,)
    assert deglex_cmp(a, b) == -1
    assert deglex_cmp((1, 1), (0, 0, 0)) == -1
    assert deglex_cmp((1, 0, 0), (0, 1, 1)) == 1
    assert deglex_cmp(EMPTY, EMPTY) == 0


@given(words, words, words)
def test_deglex_total_order(u, v, w):
    assert (deglex_cmp(u, v) == 0) == (u == v)
    assert deglex_cmp(u, v) == -deglex_cmp(v, u)
    if deglex_cmp(u, v) <= 0 and deglex_cmp(v, w) <= 0:
        assert deglex_cmp(u, w) <= 0


@given(words, words, words, words)
def test_deglex_multiplicative(u, v, x, y):
    if deglex_key(u) < deglex_key(v):
        assert deglex_key(x + u + y) < deglex_key(x + v + y)


def test_find_factor():
    assert find_factor((1, 0), (0, 1, 0, 1, 0)) == ((0,), (1, 0))
    assert find_factor((1, 1), (0, 1, 0)) is None
    assert find_factor(EMPTY, (0,)) == (EMPTY, (0,))


def test_parse_and_render():
    f = AB.parse("b^2a + bab + ab^2 - b")
    assert str(f) == "bba + bab + abb - b"
    assert str(AB.parse("1/2*bab - 3")) == "1/2*bab - 3"
    assert str(AB.parse("0")) == "0"
    assert AB.parse("2 a b") == AB.parse("2*ab")
    with pytest.raises(UsageError):
        AB.parse("2*")
    with pytest.raises(UsageError):
        AB.parse("abc")


@given(polys)
def test_render_roundtrip(f):
    assert AB.parse(str(f)) == f


def test_leading_monomial():
    f = AB.parse("bab - 2*aab + b")
    assert f.leading() == ((1, 0, 1), Fraction(1))
    with pytest.raises(ZeroDivisionError):
        AB.zero().leading()
    assert AB.parse("3*abb - a").monic() == AB.parse("abb - 1/3*a")


@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f - f == AB.zero()
    assert AB.one() * f == f == f * AB.one()


@given(polys, words, words)
def test_sandwich(f, u, v):
    assert f.sandwich(u, v) == AB.word_poly(u) * f * AB.word_poly(v)


def test_generator_sets_do_not_mix():
    xy = GeneratorSet("xy")
    with pytest.raises(UsageError):
        AB.gen("a") + xy.gen("x")
    with pytest.raises(UsageError):
        GeneratorSet("aa")
    with pytest.raises(UsageError):
        GeneratorSet([])


def test_multichar_generators():
    g = GeneratorSet(["xx", "y"])
    f = g.parse("xxy - y^2")
    assert f.leading_word() == (1, 1)
    assert str(f) == "-yy + xxy"
