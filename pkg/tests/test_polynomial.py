"""Exact polynomial arithmetic and the antidifference."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from polyalg.polynomial import Polynomial, antidifference


def test_degree_and_zero():
    assert Polynomial().degree() == -1
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([Fraction(1, 2), 0, 3]).degree() == 2


def test_arithmetic_exact():
    p = Polynomial([1, 2])      # 1 + 2x
    q = Polynomial([0, 0, 1])   # x^2
    assert (p * q).coeffs == (0, 0, 1, 2)
    assert (p + q)(Fraction(1, 2)) == Fraction(1) + 1 + Fraction(1, 4)
    assert (p - p).is_zero()


def test_shift_exact():
    p = Polynomial([0, 0, 1])  # x^2
    s = p.shift(Fraction(1, 2))  # (x + 1/2)^2
    assert s.coeffs == (Fraction(1, 4), 1, 1)


def test_antidifference_linear():
    # f = 2x -> g = x^2 + x (telescoping of x(x+1)); sign flip for -2x
    assert antidifference(Polynomial([0, 2])) == Polynomial([0, 1, 1])
    assert antidifference(Polynomial([0, -2])) == Polynomial([0, -1, -1])


def test_antidifference_quadratic_closed_form():
    # a x^2 + b x + c -> a x(x+1)(2x+1)/6 + b x(x+1)/2 + c x, checked by
    # exact-rational expansion for 20 random coefficient triples
    rng = random.Random(7)
    for _ in range(20):
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        f = Polynomial([c, b, a])
        g = antidifference(f)
        sixth = Fraction(1, 6)
        expected = (
            Polynomial([0, 1]) * Polynomial([1, 1]) * Polynomial([1, 2]) * a * sixth
            + Polynomial([0, 1]) * Polynomial([1, 1]) * b * Fraction(1, 2)
            + Polynomial([0, c])
        )
        assert g == expected
        for x in range(-10, 11):
            assert g(Fraction(x)) - g(Fraction(x - 1)) == f(Fraction(x))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.fractions(min_value=-10, max_value=10, max_denominator=6),
        min_size=1,
        max_size=6,
    )
)
def test_antidifference_telescopes_exactly(coeffs):
    f = Polynomial(coeffs)
    g = antidifference(f)
    assert g(Fraction(0)) == 0
    for x in range(-10, 11):
        assert g(Fraction(x)) - g(Fraction(x - 1)) == f(Fraction(x))


def test_from_roots():
    p = Polynomial.from_roots([1, -1])
    assert p.coeffs == (-1, 0, 1)
