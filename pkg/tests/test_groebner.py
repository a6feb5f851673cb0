from __future__ import annotations

from fractions import Fraction

import pytest

from vhodge import (
    DegreeMismatchError,
    GREVLEX,
    IdealHandle,
    InfiniteQuotientError,
    WeightedGrevlexOrder,
    WeightSystem,
    buchberger,
    graded_slice,
    ideal_power,
    ideal_sum,
    minimal_monomials,
    normal_form,
    parse_expression,
    quotient_dim,
    slice_equal,
    standard_monomials,
)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def poly(text, vars_=XY):
    return parse_expression(text, vars_)


def ideal(texts, vars_=XY):
    return buchberger([poly(t, vars_) for t in texts])


def test_buchberger_trivial():
    I = ideal(["x", "y"])
    assert [str(g) for g in I.groebner_basis] == ["y", "x"]


def test_buchberger_monic_normalization():
    I = ideal(["3*x^2", "3*y^2", "3*z^2"], XYZ)
    assert {str(g) for g in I.groebner_basis} == {"x^2", "y^2", "z^2"}


def test_buchberger_permutation_invariance():
    gens = ["x^2+y^2", "x*y"]
    a = ideal(gens)
    b = ideal(list(reversed(gens)))
    assert a.groebner_basis == b.groebner_basis


def test_buchberger_known_basis():
    # S(x^2+y^2, xy) reduces to y^3, after which all pairs drop; the
    # reduced basis is listed by ascending leading monomial.
    I = ideal(["x^2+y^2", "x*y"])
    assert [str(g) for g in I.groebner_basis] == ["x*y", "x^2 + y^2", "y^3"]


def test_buchberger_empty_and_zero():
    ring = poly("x").ring
    I = IdealHandle(ring, [ring.zero()])
    assert I.groebner_basis == ()
    assert not I.contains(poly("x"))
    assert I.contains(ring.zero())


def test_normal_form_membership():
    I = ideal(["x"])
    assert normal_form(poly("x^2"), I).is_zero
    J = ideal(["x^2"])
    assert normal_form(poly("x^2+y"), J) == poly("y")


def test_normal_form_idempotent():
    I = ideal(["x^2+y^2", "x*y"])
    g = poly("x^3 + 2/5*x*y + y")
    r = normal_form(g, I)
    assert normal_form(r, I) == r
    assert I.contains(g - r)


def test_standard_monomials_box():
    I = ideal(["x^2", "y^2"])
    assert set(standard_monomials(I)) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_standard_monomials_jacobian_of_cubic():
    I = ideal(["3*x^2", "3*y^2", "3*z^2"], XYZ)
    monos = standard_monomials(I)
    assert len(monos) == 8
    assert set(monos) == {
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1),
    }


def test_standard_monomials_one_variable():
    I = buchberger([parse_expression("x", ["x"])])
    assert standard_monomials(I) == ((0,),)


def test_standard_monomials_infinite_quotient():
    I = ideal(["x"])
    with pytest.raises(InfiniteQuotientError):
        standard_monomials(I)
    bounded = standard_monomials(I, bound=2)
    assert set(bounded) == {(0, 0), (0, 1), (0, 2)}


def test_quotient_dim():
    assert quotient_dim(ideal(["x^2", "y^2", "z^2"], XYZ)) == 8
    assert quotient_dim(ideal(["x", "y"])) == 1
    assert quotient_dim(ideal(["x^2", "x*y", "y^2"])) == 3


def test_quotient_dim_unit_ideal():
    assert quotient_dim(ideal(["1"])) == 0


def test_graded_slice_principal_cubic():
    f = poly("x^3+y^3+z^3", XYZ)
    I = IdealHandle(f.ring, [f])
    w = WeightSystem((Fraction(1, 3),) * 3)
    s = graded_slice(I, Fraction(4, 3), w)  # plain degree 4
    assert s.dim == 3
    assert s.on_grid
    assert s.contains(f * poly("x", XYZ))
    assert not s.contains(poly("x^4", XYZ))


def test_graded_slice_degree_zero():
    I = ideal(["x"])
    w = WeightSystem((Fraction(1, 2), Fraction(1, 2)))
    s = graded_slice(I, Fraction(0), w)
    assert s.dim == 0 and s.on_grid


def test_graded_slice_unit_in_degree_zero():
    I = ideal(["1"])
    w = WeightSystem((Fraction(1, 2), Fraction(1, 2)))
    assert graded_slice(I, Fraction(0), w).dim == 1


def test_graded_slice_maximal_ideal_degree_one():
    I = ideal(["x", "y"])
    w = WeightSystem((Fraction(1, 2), Fraction(1, 2)))
    s = graded_slice(I, Fraction(1, 2), w)  # plain degree 1
    assert s.dim == 2


def test_graded_slice_off_grid_flagged():
    I = ideal(["x"])
    w = WeightSystem((Fraction(1, 2), Fraction(1, 3)))
    s = graded_slice(I, Fraction(1, 6), w)
    assert not s.on_grid and s.dim == 0


def test_graded_slice_requires_homogeneous_generators():
    I = ideal(["x + x^2"])
    w = WeightSystem((Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        graded_slice(I, Fraction(1), w)


def test_slice_equal_scaling_and_difference():
    w = WeightSystem((Fraction(1), Fraction(1)))
    ring = poly("x").ring
    sx = graded_slice(IdealHandle(ring, [poly("x")]), Fraction(1), w)
    s2x = graded_slice(IdealHandle(ring, [poly("2*x")]), Fraction(1), w)
    sy = graded_slice(IdealHandle(ring, [poly("y")]), Fraction(1), w)
    assert slice_equal(sx, sx)
    assert slice_equal(sx, s2x)
    assert not slice_equal(sx, sy)


def test_slice_equal_degree_mismatch():
    w = WeightSystem((Fraction(1), Fraction(1)))
    ring = poly("x").ring
    s1 = graded_slice(IdealHandle(ring, [poly("x")]), Fraction(1), w)
    s2 = graded_slice(IdealHandle(ring, [poly("x")]), Fraction(2), w)
    with pytest.raises(DegreeMismatchError):
        slice_equal(s1, s2)


def test_ideal_sum():
    a = ideal(["x"])
    b = ideal(["y"])
    assert ideal_sum(a, b).groebner_basis == ideal(["x", "y"]).groebner_basis


def test_ideal_power():
    m = ideal(["x", "y"])
    m2 = ideal_power(m, 2)
    assert m2.groebner_basis == ideal(["x^2", "x*y", "y^2"]).groebner_basis
    unit = ideal_power(m, 0)
    assert unit.is_unit
    with pytest.raises(ValueError):
        ideal_power(m, -1)


def test_minimal_monomials_small_and_large():
    monos = [(2, 0), (1, 0), (0, 3), (1, 1), (4, 4)]
    assert minimal_monomials(monos) == [(1, 0), (0, 3)]
    # Large input exercises the numpy path; box is dominated by (0, 0).
    big = [(i, j) for i in range(12) for j in range(12)]
    assert minimal_monomials(big) == [(0, 0)]


def test_weighted_grevlex_order():
    w = WeightSystem((Fraction(1, 2), Fraction(1, 3)))
    order = WeightedGrevlexOrder(w)
    # x^2 and y^3 tie at weighted degree 1; grevlex tie break compares
    # total degree first, so y^3 wins.
    assert order.key((0, 3)) > order.key((2, 0))
    assert order.key((0, 3)) > order.key((1, 0))
    I = buchberger([poly("x^2 + y^3")], order=order)
    assert I.groebner_basis[0].leading(order.key)[0] == (0, 3)


def test_contains_across_orders():
    f = poly("x^2+y^3")
    w = WeightSystem((Fraction(1, 2), Fraction(1, 3)))
    a = buchberger([f], order=GREVLEX)
    b = buchberger([f], order=WeightedGrevlexOrder(w))
    g = poly("x^2*y + y^4")
    assert a.contains(g) == b.contains(g) is True
