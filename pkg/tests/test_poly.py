from fractions import Fraction

import pytest

from theta_lab.errors import PolyParseError
from theta_lab.poly import (LocalOrder, Poly, jacobian_ideal, parse_poly,
                            unit_inverse_series)

XY = ["x", "y"]


def P(text, names=XY):
    return parse_poly(text, names)


class TestParser:
    def test_simple(self):
        assert P("x + y").terms == {(1, 0): 1, (0, 1): 1}

    def test_rational_coefficient(self):
        assert P("3/4*x^2").terms == {(2, 0): Fraction(3, 4)}

    def test_parentheses_and_signs(self):
        assert P("-(x - y)*(x + y)") == P("y^2 - x^2")

    def test_power_zero(self):
        assert P("x^0") == Poly.const(1, 2)

    def test_whitespace_insignificant(self):
        assert P("  x * y  +  1 ") == P("x*y+1")

    def test_no_implicit_multiplication(self):
        with pytest.raises(PolyParseError):
            P("x y")
        with pytest.raises(PolyParseError):
            P("2x")

    def test_stacked_caret_rejected(self):
        with pytest.raises(PolyParseError):
            P("x^2^3")

    def test_unknown_variable_reports_position(self):
        with pytest.raises(PolyParseError) as err:
            P("x + q")
        assert err.value.position == 4

    def test_double_star_rejected_with_position(self):
        with pytest.raises(PolyParseError) as err:
            P("x**y")
        assert err.value.position == 2

    def test_zero_denominator(self):
        with pytest.raises(PolyParseError):
            P("1/0")

    def test_trailing_garbage(self):
        with pytest.raises(PolyParseError):
            P("x + y)")

    def test_underscore_names(self):
        assert parse_poly("x_1 + x_2", ["x_1", "x_2"]).terms == {
            (1, 0): 1, (0, 1): 1}


class TestArithmetic:
    def test_sub_cancels(self):
        assert not (P("x + y") - P("x + y"))

    def test_product(self):
        assert P("x + y") * P("x - y") == P("x^2 - y^2")

    def test_pow_matches_repeated_mul(self):
        f = P("1 + x + y^2")
        assert f ** 3 == f * f * f

    def test_scalar_ops(self):
        assert P("x") * Fraction(1, 2) + 1 == P("1 + 1/2*x")

    def test_partial_derivative(self):
        f = P("x^3*y + 2*y^2")
        assert f.partial(0) == P("3*x^2*y")
        assert f.partial(1) == P("x^3 + 4*y")

    def test_jacobian_ideal(self):
        f = P("x*y - z^2", ["x", "y", "z"])
        assert jacobian_ideal(f) == [
            P("y", ["x", "y", "z"]), P("x", ["x", "y", "z"]),
            P("-2*z", ["x", "y", "z"])]


class TestLocalOrder:
    def test_one_is_largest(self):
        o = LocalOrder(2)
        assert o.greater((0, 0), (1, 0))
        assert o.greater((0, 0), (0, 5))

    def test_lower_degree_wins(self):
        o = LocalOrder(3)
        assert o.greater((1, 0, 0), (1, 1, 0))

    def test_revlex_tie_break(self):
        o = LocalOrder(2)
        # same degree: smaller last exponent is larger
        assert o.greater((2, 0), (1, 1))

    def test_multiplicative(self):
        o = LocalOrder(2)
        pairs = [((1, 0), (0, 1)), ((2, 0), (1, 1)), ((0, 2), (1, 2))]
        for a, b in pairs:
            g = o.greater(a, b)
            shifted = tuple(x + 1 for x in a), tuple(x + 1 for x in b)
            assert o.greater(*shifted) == g

    def test_leading_term(self):
        f = P("x^2 + x + y^3")
        m, c = f.leading(LocalOrder(2))
        assert m == (1, 0) and c == 1


class TestUnitInverse:
    def test_geometric_series(self):
        u = P("1 - x")
        inv = unit_inverse_series(u, 5)
        assert (u * inv).truncate(5) == Poly.const(1, 2)

    def test_scaled_unit(self):
        u = P("2 + x + y^2")
        inv = unit_inverse_series(u, 6)
        assert (u * inv).truncate(6) == Poly.const(1, 2)

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            unit_inverse_series(P("x"), 4)


class TestPrinting:
    def test_round_trip(self):
        f = P("1 - 2*x + 3/5*x*y^2")
        assert P(f.to_string(XY)) == f

    def test_zero(self):
        assert Poly.zero(2).to_string(XY) == "0"
