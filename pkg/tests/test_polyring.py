from __future__ import annotations

from fractions import Fraction

import pytest

from vhodge import (
    InconsistentWeightsError,
    NonPositiveWeightsError,
    ParseError,
    Ring,
    UnderdeterminedWeightsError,
    UnknownVariableError,
    WeightSystem,
    alpha_value,
    attainable_degrees,
    check_coordinate_powers,
    check_weighted_homogeneous,
    exact_quotient,
    infer_variables,
    infer_weights,
    monomials_of_weighted_degree,
    parse_expression,
)

XYZ = ["x", "y", "z"]
XY = ["x", "y"]


def test_parse_fermat_cubic():
    p = parse_expression("x^3+y^3+z^3", XYZ)
    assert len(p) == 3
    assert all(c == 1 for _, c in p.items())
    assert p.coefficient((3, 0, 0)) == 1


def test_parse_rational_coefficients():
    p = parse_expression("2/3*x*y - y^2", XY)
    assert p.terms == {(1, 1): Fraction(2, 3), (0, 2): Fraction(-1)}


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_expression("x^^2", XY)
    assert err.value.position == 2


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse_expression("x+t", XY)


def test_parse_rejects_negative_exponent():
    with pytest.raises(ParseError):
        parse_expression("x^-1", XY)


def test_parse_requires_explicit_multiplication():
    with pytest.raises(ParseError):
        parse_expression("2x", XY)


def test_parse_parentheses_and_unary_minus():
    p = parse_expression("-(x-y)*(x+y)", XY)
    q = parse_expression("y^2-x^2", XY)
    assert p == q


def test_parse_print_roundtrip():
    for text in ["x^3+y^3+z^3", "2/3*x*y - y^2 + 7", "-x", "0", "5/6"]:
        vars_ = XYZ if "z" in text else XY
        p = parse_expression(text, vars_)
        assert parse_expression(str(p), vars_) == p


def test_canonical_print_descending_grevlex():
    p = parse_expression("y^2 + x^2*y + 1 + x", XY)
    assert str(p) == "x^2*y + y^2 + x + 1"


def test_infer_variables_first_appearance():
    assert infer_variables("z^2 + 3*a*z + b_1") == ["z", "a", "b_1"]


def test_partial_derivative_power_rule():
    p = parse_expression("x^3+y^3+z^3", XYZ)
    assert p.partial_derivative(0) == parse_expression("3*x^2", XYZ)


def test_partial_derivative_coefficient():
    p = parse_expression("2/3*x*y", XY)
    assert p.partial_derivative(1) == parse_expression("2/3*x", XY)


def test_partial_derivative_absent_variable():
    p = parse_expression("x^2", XYZ)
    assert p.partial_derivative(2).is_zero


def test_alpha_value_unit_monomial():
    w = WeightSystem((Fraction(1, 3),) * 3)
    assert alpha_value((0, 0, 0), w) == 1


def test_alpha_value_xyz():
    w = WeightSystem((Fraction(1, 3),) * 3)
    assert alpha_value((1, 1, 1), w) == 2


def test_alpha_value_mixed_weights():
    w = WeightSystem((Fraction(1, 2), Fraction(1, 3)))
    assert alpha_value((1, 0), w) == Fraction(4, 3)


def test_alpha_value_dimension_mismatch():
    w = WeightSystem((Fraction(1, 2),))
    with pytest.raises(ValueError):
        alpha_value((1, 0), w)


def test_infer_weights_diagonal():
    f = parse_expression("x^3+y^3+z^3", XYZ)
    assert infer_weights(f).weights == (Fraction(1, 3),) * 3


def test_infer_weights_cusp():
    f = parse_expression("x^2+y^3", XY)
    assert infer_weights(f).weights == (Fraction(1, 2), Fraction(1, 3))


def test_infer_weights_solvable_two_by_two():
    f = parse_expression("x^2+x*y", XY)
    assert infer_weights(f).weights == (Fraction(1, 2), Fraction(1, 2))


def test_infer_weights_inconsistent():
    f = parse_expression("x^2+x", XY)
    with pytest.raises(InconsistentWeightsError):
        infer_weights(f)


def test_infer_weights_underdetermined():
    f = parse_expression("x*y", XY)
    with pytest.raises(UnderdeterminedWeightsError):
        infer_weights(f)


def test_infer_weights_non_positive():
    f = parse_expression("x + x^2*y", XY)
    with pytest.raises(NonPositiveWeightsError):
        infer_weights(f)


def test_check_weighted_homogeneous():
    f = parse_expression("x^3+y^3+z^3", XYZ)
    assert check_weighted_homogeneous(f, WeightSystem((Fraction(1, 3),) * 3))
    g = parse_expression("x^2+y^3", XY)
    assert check_weighted_homogeneous(g, WeightSystem((Fraction(1, 2), Fraction(1, 3))))
    assert not check_weighted_homogeneous(g, WeightSystem((Fraction(1, 2), Fraction(1, 2))))


def test_check_coordinate_powers():
    f = parse_expression("x^3+y^3+z^3", XYZ)
    assert check_coordinate_powers(f, WeightSystem((Fraction(1, 3),) * 3))
    g = parse_expression("x^2+y^3", XY)
    assert check_coordinate_powers(g, WeightSystem((Fraction(1, 2), Fraction(1, 3))))
    h = parse_expression("x^2*y + y^3", XY)
    assert not check_coordinate_powers(h, WeightSystem((Fraction(1, 3), Fraction(1, 3))))


def test_exact_quotient():
    f = parse_expression("x^2+y^2", XY)
    g = parse_expression("(x^2+y^2)*(x-y)", XY)
    assert exact_quotient(g, f) == parse_expression("x-y", XY)
    assert exact_quotient(parse_expression("x^3", XY), f) is None


def test_monomials_of_weighted_degree_plain():
    w = WeightSystem((Fraction(1),) * 2)
    monos = monomials_of_weighted_degree(w, Fraction(2))
    assert set(monos) == {(2, 0), (1, 1), (0, 2)}
    assert monos[0] == (2, 0)  # descending grevlex


def test_monomials_of_weighted_degree_off_grid():
    w = WeightSystem((Fraction(1, 2), Fraction(1, 3)))
    assert monomials_of_weighted_degree(w, Fraction(1, 6)) == ()
    assert len(monomials_of_weighted_degree(w, Fraction(1))) == 2


def test_attainable_degrees_cusp_grid():
    w = WeightSystem((Fraction(1, 2), Fraction(1, 3)))
    degrees = attainable_degrees(w, Fraction(1))
    assert degrees == (
        Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3),
        Fraction(5, 6), Fraction(1),
    )


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring(("X",))
    with pytest.raises(ValueError):
        Ring(("x", "x"))
