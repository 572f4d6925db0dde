from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroid_gwp.polys import (
    ZERO_DEGREE,
    BiPoly,
    TriPoly,
    UniPoly,
    binomial_power,
    interpolate_1d,
    interpolate_grid,
    render_uni,
)


@pytest.mark.parametrize(
    "coeffs,text",
    [
        ([28, -43, 15], "15Z^2 - 43Z + 28"),
        ([-1, 1], "Z - 1"),
        ([0, -1], "-Z"),
        ([5], "5"),
        ([], "0"),
        ([10, -23, 19, -7, 1], "Z^4 - 7Z^3 + 19Z^2 - 23Z + 10"),
    ],
)
def test_render(coeffs, text):
    assert render_uni(UniPoly(coeffs)) == text == str(UniPoly(coeffs))


def test_zero_degree_sentinel():
    assert UniPoly().degree is ZERO_DEGREE
    assert UniPoly([0, 0]).degree is ZERO_DEGREE
    assert UniPoly([3]).degree == 0
    assert UniPoly([0, 0, 1]).degree == 2


def test_trailing_zeros_trimmed():
    assert UniPoly([1, 2, 0, 0]) == UniPoly([1, 2])
    assert UniPoly([0]) == 0 and UniPoly([4]) == 4


ints = st.lists(st.integers(-20, 20), max_size=6)


@settings(max_examples=100)
@given(ints, ints, st.integers(-5, 5))
def test_ring_operations_evaluate(a, b, z):
    P, Q = UniPoly(a), UniPoly(b)
    assert (P + Q)(z) == P(z) + Q(z)
    assert (P - Q)(z) == P(z) - Q(z)
    assert (P * Q)(z) == P(z) * Q(z)


def test_multivariate_rendering():
    t = BiPoly({(1, 0): 1, (0, 1): 1})
    assert str(t) == "X + Y"
    W = TriPoly({(2, 0, 0): 1, (0, 2, 1): 1, (0, 2, 0): -1})
    assert str(W) == "X^2 + Y^2Z - Y^2"
    assert W(2, 3, 5) == 4 + 45 - 9
    assert W.degree_in(2) == 1 and W.coeff(0, 2, 1) == 1 and W.coeff(1, 1, 1) == 0


def test_multivariate_arithmetic():
    X = BiPoly({(1, 0): 1})
    Y = BiPoly({(0, 1): 1})
    P = (X + Y) * (X - Y)
    assert P == BiPoly({(2, 0): 1, (0, 2): -1})
    assert (P - P).is_zero()


@pytest.mark.parametrize("a,b,d", [(1, 1, 4), (2, -1, 3), (0, 5, 2), (3, 2, 0)])
def test_binomial_power(a, b, d):
    # coefficients of (a + bV)^d, constant first
    cs = binomial_power(a, b, d)
    for x in range(-3, 4):
        assert sum(c * x ** k for k, c in enumerate(cs)) == (a + b * x) ** d


def test_interpolate_1d_exact():
    xs = [0, 1, 2, 3]
    ys = [x ** 3 - 2 * x + 1 for x in xs]
    assert interpolate_1d(xs, ys) == [1, -2, 0, 1]


def test_interpolate_1d_rational():
    cs = interpolate_1d([0, 2], [0, 1])
    assert cs == [0, Fraction(1, 2)]


def test_interpolate_grid():
    def f(x, y):
        return 3 * x ** 2 * y - x * y ** 2 + 7

    grid = interpolate_grid(f, [0, 1, 2], [0, 1, 2])
    coeffs = {(i, j): c for (i, j), c in grid.items() if c}
    assert coeffs == {(2, 1): 3, (1, 2): -1, (0, 0): 7}
