from __future__ import annotations

import math
from fractions import Fraction

import pytest

from vhodge import (
    CoordinatePowerWarning,
    InvalidInputError,
    NonIsolatedSingularityError,
    NotWeightedHomogeneousError,
    SmoothDivisorError,
    Spectrum,
    WeightSystem,
    build_milnor,
    lct,
    mlct,
    parse_expression,
    reduced_bs_roots,
    spectrum,
)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def sp(pairs):
    return Spectrum(tuple((Fraction(a), m) for a, m in pairs))


def test_build_milnor_cubic(cubic):
    assert cubic.mu == 8
    assert cubic.weights.weights == (Fraction(1, 3),) * 3
    assert (0, 0, 0) in cubic.basis and (1, 1, 1) in cubic.basis


def test_build_milnor_cusp(cusp):
    assert cusp.mu == 2
    assert set(cusp.basis) == {(0, 0), (0, 1)}


def test_build_milnor_smooth_divisor():
    with pytest.raises(SmoothDivisorError):
        build_milnor(parse_expression("x+y", XY))


def test_build_milnor_non_isolated():
    f = parse_expression("x^2*y^2", XY)
    w = WeightSystem((Fraction(1, 4), Fraction(1, 4)))
    with pytest.raises(NonIsolatedSingularityError):
        build_milnor(f, w)


def test_build_milnor_rejects_constant():
    with pytest.raises(InvalidInputError):
        build_milnor(parse_expression("5", XY))


def test_build_milnor_bad_explicit_weights():
    f = parse_expression("x^2+y^3", XY)
    with pytest.raises(NotWeightedHomogeneousError):
        build_milnor(f, WeightSystem((Fraction(1, 2), Fraction(1, 2))))


def test_build_milnor_warns_on_missing_pure_power():
    # x^3*y + y^3 is weighted homogeneous for (2/9, 1/3) but has no pure
    # power of x; the build succeeds with a warning.
    f = parse_expression("x^3*y + y^3", XY)
    with pytest.warns(CoordinatePowerWarning):
        M = build_milnor(f)
    assert M.mu == 7


def test_spectrum_cubic(cubic):
    assert spectrum(cubic) == sp([(1, 1), (Fraction(4, 3), 3), (Fraction(5, 3), 3), (2, 1)])


def test_spectrum_cusp(cusp):
    assert spectrum(cusp) == sp([(Fraction(5, 6), 1), (Fraction(7, 6), 1)])


def test_spectrum_quadric(quadric3):
    assert spectrum(quadric3) == sp([(Fraction(3, 2), 1)])


def test_spectrum_total_is_mu(cubic, cusp, quartic, e8_like):
    for M in (cubic, cusp, quartic, e8_like):
        assert spectrum(M).total == M.mu


def test_spectrum_symmetry(cubic, cusp, quartic, e8_like, quadric3):
    for M in (cubic, cusp, quartic, e8_like, quadric3):
        assert spectrum(M).is_symmetric(M.n)


def test_mlct_lct_table(cubic, cusp, quadric3, e8_like):
    assert (mlct(cusp), lct(cusp)) == (Fraction(5, 6), Fraction(5, 6))
    assert (mlct(quadric3), lct(quadric3)) == (Fraction(3, 2), Fraction(1))
    assert (mlct(cubic), lct(cubic)) == (Fraction(1), Fraction(1))
    assert (mlct(e8_like), lct(e8_like)) == (Fraction(8, 15), Fraction(8, 15))


def test_reduced_bs_roots(cubic, cusp, quadric3):
    assert reduced_bs_roots(cusp) == (Fraction(5, 6), Fraction(7, 6))
    assert reduced_bs_roots(quadric3) == (Fraction(3, 2),)
    assert reduced_bs_roots(cubic) == (
        Fraction(1), Fraction(4, 3), Fraction(5, 3), Fraction(2),
    )


def test_reduced_bs_roots_interval(cubic, cusp, quartic, e8_like, quadric3):
    for M in (cubic, cusp, quartic, e8_like, quadric3):
        low = mlct(M)
        high = M.n - low
        assert all(low <= r <= high for r in reduced_bs_roots(M))


def test_milnor_orlik_product(cubic, cusp, quartic, e8_like, quadric3):
    # mu equals prod(1/w_i - 1) when every 1/w_i is an integer and all
    # pure powers occur.
    for M in (cubic, cusp, quartic, e8_like, quadric3):
        expected = math.prod(int(1 / w) - 1 for w in M.weights.weights)
        assert M.mu == expected


def test_non_diagonal_homogeneous_input():
    # x^3+y^3+z^3+x*y*z is homogeneous with an isolated singularity and
    # a genuinely non-monomial Jacobian ideal.
    f = parse_expression("x^3+y^3+z^3+x*y*z", XYZ)
    M = build_milnor(f)
    assert M.mu == 8
    assert spectrum(M) == sp([(1, 1), (Fraction(4, 3), 3), (Fraction(5, 3), 3), (2, 1)])
