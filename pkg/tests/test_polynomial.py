import pytest

from hilbertkunz.errors import ParseError
from hilbertkunz.polynomial import MultiPoly, monomials_of_degree, parse_poly

XYZ = ["x", "y", "z"]


def test_parse_reduces_coefficients():
    f = parse_poly("7*x^2*y - 2*z^3 + x^2*y", XYZ, 5)
    assert f.coefficient((2, 1, 0)) == 3
    assert f.coefficient((0, 0, 3)) == 3
    assert f.is_homogeneous() and f.degree == 3


def test_parse_cancellation_gives_zero():
    assert parse_poly("x*y - y*x", XYZ, 3).is_zero()


@pytest.mark.parametrize("text", ["x^", "x^^2", "2x", "x*", "q*x", "x + + y", "", "x^-1", "(x)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text, XYZ, 5)


def test_roundtrip_through_str():
    f = parse_poly("y^2*z + 4*x*y*z - x^3 - z^3", XYZ, 5)
    assert parse_poly(str(f), XYZ, 5) == f


def test_arithmetic():
    x, y = (MultiPoly.variable(i, 3, 7) for i in range(2))
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x + y) ** 7 == x**7 + y**7  # Frobenius


def test_substitute_linear_identity_and_swap():
    f = parse_poly("x^2*y + z^3", XYZ, 5)
    assert f.substitute_linear([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == f
    swapped = f.substitute_linear([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert swapped == parse_poly("y^2*x + z^3", XYZ, 5)


def test_monomials_of_degree_counts():
    from math import comb
    for nv in range(1, 5):
        for d in range(6):
            monos = monomials_of_degree(nv, d)
            assert len(monos) == comb(d + nv - 1, nv - 1) == len(set(monos))
            assert monos == sorted(monos, reverse=True)


def test_pure_power_variables():
    f = parse_poly("y^2*z - x^3 - x*z^2", XYZ, 5)
    assert f.pure_power_variables() == [0]
    assert parse_poly("x*y*z", XYZ, 5).pure_power_variables() == []
