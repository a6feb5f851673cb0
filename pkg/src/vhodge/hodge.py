"""Degreewise Hodge-ideal slices and the equality verifiers.

The p-th Hodge ideal of the divisor of f is assembled degree by degree:
the weighted-degree-e piece is the span of the polynomials

    f^(p+1) * d^nu (u / f^(p+1-|nu|))

over multi-indices |nu| <= p and monomials u with alpha(u) >= p+1-|nu|.
That span is already a module over the local ring: multiplying a
generator by a coordinate and expanding by the Leibniz rule rewrites the
product inside the same family with either a deeper numerator or a
smaller |nu| (the numerator gains a factor of f exactly compensating the
dropped derivatives), so no extra monomial-multiplier closure is needed.
A property test exercises this closure on the computed slices.

The verifiers compare these slices with the slices of the V-filtration
level at p + 1, either exactly or after adding the degree-e piece of the
principal ideal (f) to both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Optional

from .errors import DegreeMismatchError, HomogeneityRequiredError, InvalidInputError
from .groebner import GradedSlice, IdealHandle, SliceBuilder, graded_slice, ideal_sum, slice_equal
from .milnor import MilnorData, build_milnor
from .polyring import (
    Mono,
    Polynomial,
    attainable_degrees,
    check_coordinate_powers,
    exact_quotient,
    monomials_of_weighted_degree,
    parse_expression,
)
from .vfilt import v_level, v_member


# ---------------------------------------------------------------------------
# rational functions with pole along f
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PoleFraction:
    """numerator / f^pole in canonical form (f does not divide numerator)."""

    numerator: Polynomial
    pole: int
    divisor: Polynomial

    @classmethod
    def make(cls, numerator: Polynomial, pole: int,
             divisor: Polynomial) -> "PoleFraction":
        if pole < 0:
            raise ValueError("pole order must be non-negative")
        if numerator.is_zero:
            return cls(numerator, 0, divisor)
        while pole > 0:
            q = exact_quotient(numerator, divisor)
            if q is None:
                break
            numerator = q
            pole -= 1
        return cls(numerator, pole, divisor)


def quotient_derivative(q: PoleFraction, i: int) -> PoleFraction:
    """d/dx_i of numerator/f^pole, canonicalized.

    d(g/f^m) = (f * dg - m * g * df/dx_i) / f^(m+1).
    """
    g, m, f = q.numerator, q.pole, q.divisor
    if m == 0:
        return PoleFraction.make(g.partial_derivative(i), 0, f)
    num = f * g.partial_derivative(i) - g * f.partial_derivative(i) * m
    return PoleFraction.make(num, m + 1, f)


def _stratum_numerator(M: MilnorData, u: Mono, combo: tuple[int, ...],
                       pole: int) -> Polynomial:
    """f^(pole+len(combo)) * d^combo(u / f^pole), pole kept uncancelled."""
    num = M.ring.monomial(u)
    m = pole
    f = M.f
    for i in combo:
        num = f * num.partial_derivative(i) - num * M.partials[i] * m
        m += 1
    return num


# ---------------------------------------------------------------------------
# slices of the Hodge ideal
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HodgeSlice:
    """Degree-e piece of the p-th Hodge ideal as a canonical slice."""

    p: int
    degree: Fraction
    slice: GradedSlice


def hodge_slice(M: MilnorData, p: int, e: Fraction) -> HodgeSlice:
    """Canonical echelon basis of the weighted-degree-e Hodge-ideal piece."""
    if p < 0:
        raise InvalidInputError("p must be non-negative")
    e = Fraction(e)
    with M._lock:
        hit = M._hodge_slices.get((p, e))
    if hit is not None:
        return hit

    w = M.weights
    builder = SliceBuilder(M.ring, w, e)
    if not builder.columns:
        raise InvalidInputError(
            f"weighted degree {e} is not attainable for weights "
            f"{tuple(map(str, w.weights))}"
        )
    # |nu| = 0 stratum: monomials of degree e inside the alpha >= p+1 ideal.
    for m in builder.columns:
        if w.alpha(m) >= p + 1:
            builder.add(M.ring.monomial(m))
    # Derivative strata, cheapest first; each contributes
    # f^(p+1) d^nu(u/f^(p+1-|nu|)) for monomials u with alpha(u) >= p+1-|nu|.
    for size in range(1, p + 1):
        if builder.full:
            break
        pole = p + 1 - size
        for combo in combinations_with_replacement(range(M.n), size):
            if builder.full:
                break
            drop = sum(1 - w.weights[i] for i in combo)
            target = e - drop
            if target < 0:
                continue
            for u in monomials_of_weighted_degree(w, target):
                if w.alpha(u) < pole:
                    continue
                builder.add(_stratum_numerator(M, u, combo, pole))
    result = HodgeSlice(p=p, degree=e, slice=builder.build())
    with M._lock:
        M._hodge_slices.setdefault((p, e), result)
        return M._hodge_slices[(p, e)]


def _divisor_rows(M: MilnorData, e: Fraction) -> list[Polynomial]:
    """Spanning set of the degree-e piece of the principal ideal (f)."""
    return [
        M.f.mul_monomial(u)
        for u in monomials_of_weighted_degree(M.weights, e - 1)
    ]


def _augment(M: MilnorData, base: GradedSlice,
             extra: list[Polynomial]) -> GradedSlice:
    builder = SliceBuilder(M.ring, M.weights, base.degree, columns=base.columns)
    for row in base.rows:
        builder.add_vector(dict(row))
    for p in extra:
        if builder.full:
            break
        builder.add(p)
    return builder.build()


# ---------------------------------------------------------------------------
# equality verifiers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeComparison:
    degree: Fraction
    equal: bool
    dim_hodge: int
    dim_vlevel: int


@dataclass(frozen=True)
class EqualityReport:
    """Per-degree comparison of Hodge-ideal and filtration-level slices."""

    name: str
    p: int
    modulo_divisor: bool
    max_degree: Fraction
    comparisons: tuple[DegreeComparison, ...]

    @property
    def passed(self) -> bool:
        return all(c.equal for c in self.comparisons)

    @property
    def failing_degrees(self) -> tuple[Fraction, ...]:
        return tuple(c.degree for c in self.comparisons if not c.equal)


def compare_slices(M: MilnorData, p: int, e_max: Optional[Fraction],
                   modulo_divisor: bool, name: str) -> EqualityReport:
    """Compare Hodge and level slices on every attainable degree <= e_max."""
    e_max = Fraction(e_max) if e_max is not None else Fraction(p + 2)
    level = v_level(M, Fraction(p + 1))
    comparisons = []
    for e in attainable_degrees(M.weights, e_max):
        h = hodge_slice(M, p, e).slice
        v = graded_slice(level.ideal, e, M.weights)
        if modulo_divisor and e >= 1:
            rows = _divisor_rows(M, e)
            h = _augment(M, h, rows)
            v = _augment(M, v, rows)
        comparisons.append(
            DegreeComparison(
                degree=e,
                equal=slice_equal(h, v),
                dim_hodge=h.dim,
                dim_vlevel=v.dim,
            )
        )
    return EqualityReport(
        name=name,
        p=p,
        modulo_divisor=modulo_divisor,
        max_degree=e_max,
        comparisons=tuple(comparisons),
    )


def verify_theorem1(M: MilnorData, p: int,
                    e_max: Optional[Fraction] = None,
                    modulo_divisor: bool = True) -> EqualityReport:
    """Degreewise equality of the p-th Hodge ideal and the level at p+1,
    after adding the degree piece of (f) to both sides (the default)."""
    return compare_slices(M, p, e_max, modulo_divisor, "theorem1")


def verify_242(M: MilnorData, p: int,
               e_max: Optional[Fraction] = None) -> EqualityReport:
    """Strict degreewise equality for p in {0, 1} on homogeneous input.

    Requires all weights equal to 1/d and every pure power present; other
    inputs are refused rather than guessed about.
    """
    if p not in (0, 1):
        raise InvalidInputError("strict equality is only asserted for p in {0, 1}")
    if not M.weights.is_homogeneous:
        raise HomogeneityRequiredError(
            "strict equality requires a homogeneous polynomial (equal weights 1/d)"
        )
    if not check_coordinate_powers(M.f, M.weights):
        raise HomogeneityRequiredError(
            "strict equality requires every pure power x_i^d to occur in f"
        )
    return compare_slices(M, p, e_max, False, "eq242")


def verify_remark_i(M: MilnorData, p_max: int = 3,
                    e_max: Optional[Fraction] = None) -> tuple[EqualityReport, ...]:
    """Strict equality for all p <= p_max in the ordinary-double-point case
    (every weight 1/2); no divisor correction is applied."""
    if any(w != Fraction(1, 2) for w in M.weights.weights):
        raise HomogeneityRequiredError(
            "this check applies to quadrics only (all weights 1/2)"
        )
    return tuple(
        compare_slices(M, p, e_max, False, f"remark-i p={p}")
        for p in range(p_max + 1)
    )


# ---------------------------------------------------------------------------
# the Fermat-cubic counterexample at p = 2
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RemarkIIReport:
    """Checks showing strict equality fails at p = 2 for x^3 + y^3 + z^3.

    The second x-derivative of 1/f has numerator 12x^4 - 6x(y^3 + z^3)
    over f^3, so that polynomial lies in the degree-4 Hodge slice; x^4 is
    in the level at 3 but x(y^3 + z^3) is not, hence the two ideals
    differ, while adding (f) restores the equality.
    """

    derivative_matches: bool
    x4_in_level3: bool
    mixed_in_level3: bool          # expected False
    derivative_in_hodge_slice: bool
    slices_differ_at_degree4: bool
    mixed_in_level3_plus_divisor: bool

    @property
    def passed(self) -> bool:
        return (self.derivative_matches and self.x4_in_level3
                and not self.mixed_in_level3 and self.derivative_in_hodge_slice
                and self.slices_differ_at_degree4
                and self.mixed_in_level3_plus_divisor)


def counterexample_remark_ii() -> RemarkIIReport:
    """Run the fixed Fermat-cubic instance and report every assertion."""
    f = parse_expression("x^3+y^3+z^3", ["x", "y", "z"])
    M = build_milnor(f)
    ring = M.ring
    x4 = parse_expression("x^4", ["x", "y", "z"])
    mixed = parse_expression("x*(y^3+z^3)", ["x", "y", "z"])
    witness = parse_expression("12*x^4 - 6*x*(y^3+z^3)", ["x", "y", "z"])

    second = quotient_derivative(
        quotient_derivative(PoleFraction.make(ring.one(), 1, f), 0), 0
    )
    derivative_matches = second == PoleFraction.make(witness, 3, f)

    e4 = Fraction(4, 3)  # plain degree 4
    hs = hodge_slice(M, 2, e4).slice
    level3 = v_level(M, Fraction(3))
    vs = graded_slice(level3.ideal, e4, M.weights)
    divisor = IdealHandle(ring, [f])

    return RemarkIIReport(
        derivative_matches=derivative_matches,
        x4_in_level3=v_member(M, x4, Fraction(3)),
        mixed_in_level3=v_member(M, mixed, Fraction(3)),
        derivative_in_hodge_slice=hs.contains(witness),
        slices_differ_at_degree4=not slice_equal(hs, vs),
        mixed_in_level3_plus_divisor=ideal_sum(level3.ideal, divisor).contains(mixed),
    )
