from __future__ import annotations

import math
from fractions import Fraction

import pytest

from vhodge import (
    DiagonalSpec,
    Spectrum,
    as_diagonal_spec,
    bp_candidates,
    bp_spectrum,
    bp_v_generators,
    bp_v_member,
    parse_expression,
)


def sp(pairs):
    return Spectrum(tuple((Fraction(a), m) for a, m in pairs))


def test_bp_spectrum_cusp():
    assert bp_spectrum(DiagonalSpec((2, 3))) == sp(
        [(Fraction(5, 6), 1), (Fraction(7, 6), 1)]
    )


def test_bp_spectrum_cubic():
    assert bp_spectrum(DiagonalSpec((3, 3, 3))) == sp(
        [(1, 1), (Fraction(4, 3), 3), (Fraction(5, 3), 3), (2, 1)]
    )


def test_bp_spectrum_node():
    assert bp_spectrum(DiagonalSpec((2, 2))) == sp([(1, 1)])


def test_bp_spectrum_size():
    for exps in [(2, 3), (4, 4), (2, 3, 4), (5, 5, 5)]:
        spec = DiagonalSpec(exps)
        assert bp_spectrum(spec).total == math.prod(a - 1 for a in exps)


def test_bp_v_member_quadric():
    spec = DiagonalSpec((2, 2, 2))
    x = (1, 0, 0)
    assert bp_v_member(spec, x, Fraction(5, 2))
    assert not bp_v_member(spec, x, Fraction(7, 2))


def test_bp_v_member_cubic_x4():
    spec = DiagonalSpec((3, 3, 3))
    assert bp_v_member(spec, (4, 0, 0), Fraction(3))
    assert not bp_v_member(spec, (1, 3, 0), Fraction(3))


def test_bp_v_member_unit_at_mlct():
    for exps in [(2, 2), (2, 3), (3, 3, 3), (2, 3, 4, 5)]:
        spec = DiagonalSpec(exps)
        one = (0,) * spec.n
        assert bp_v_member(spec, one, spec.mlct)
        assert not bp_v_member(spec, one, spec.mlct + Fraction(1, 99))


def test_bp_v_generators_are_minimal():
    spec = DiagonalSpec((3, 3, 3))
    gens = bp_v_generators(spec, Fraction(3))
    for g in gens:
        others = [h for h in gens if h != g]
        assert not any(all(a <= b for a, b in zip(h, g)) for h in others)


def test_bp_candidates_grid():
    spec = DiagonalSpec((2, 2, 2))
    assert bp_candidates(spec, 4) == (
        Fraction(3, 2), Fraction(5, 2), Fraction(7, 2),
    )


def test_as_diagonal_spec():
    f = parse_expression("x^3+y^3+z^3", ["x", "y", "z"])
    assert as_diagonal_spec(f) == DiagonalSpec((3, 3, 3))
    g = parse_expression("x^2+y^3", ["x", "y"])
    assert as_diagonal_spec(g) == DiagonalSpec((2, 3))
    assert as_diagonal_spec(parse_expression("x^2+x*y", ["x", "y"])) is None
    assert as_diagonal_spec(parse_expression("x^2+y", ["x", "y"])) is None


def test_diagonal_spec_validation():
    with pytest.raises(ValueError):
        DiagonalSpec((1, 3))
    with pytest.raises(ValueError):
        DiagonalSpec(())


def test_diagonal_polynomial_roundtrip():
    spec = DiagonalSpec((2, 3, 4))
    f = spec.polynomial()
    assert as_diagonal_spec(f) == spec
    assert f.ring.variables == ("x", "y", "z")
