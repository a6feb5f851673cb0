"""Microlocal V-filtration levels on the local ring.

A level at index alpha is the ideal generated by y^nu * v_j over all
pairs of a Milnor-basis monomial v_j and a multi-index nu with
alpha(v_j) + |nu| >= alpha, where y^nu is the product of the matching
partial derivatives of f.  Every alpha(v_j) is at least the weight sum
(the mlct), so strata with |nu| >= K := max(0, ceil(alpha - mlct)) are
unconstrained and collapse to the K-th power of the Jacobian ideal; the
finitely many lower strata are kept explicitly.  Within one stratum a
basis monomial divisible by another one in the same stratum contributes
a redundant generator and is pruned.

Levels only change at the candidate grid {alpha(v_j) + k, k in N}: for
alpha between consecutive candidates both the strata and K are constant,
which jumping-number and order searches rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Optional

from .errors import InvalidInputError
from .groebner import (
    GREVLEX,
    IdealHandle,
    minimal_monomials,
    quotient_dim,
)
from .milnor import MilnorData, mlct, spectrum
from .polyring import Mono, Polynomial


@dataclass(frozen=True)
class VLevel:
    """One filtration level: indexed generators and the ideal they span."""

    alpha: Fraction
    generators: tuple[tuple[Mono, tuple[int, ...], Polynomial], ...]
    ideal: IdealHandle


@dataclass(frozen=True)
class JumpList:
    """Strictly increasing jumping numbers with graded dimensions."""

    entries: tuple[tuple[Fraction, int], ...]
    ceiling: Fraction


def _y_power(M: MilnorData, cache: dict, combo: tuple[int, ...]) -> Polynomial:
    """Product of partial derivatives indexed by the multiset ``combo``."""
    if combo in cache:
        return cache[combo]
    if not combo:
        out = M.ring.one()
    else:
        out = _y_power(M, cache, combo[:-1]) * M.partials[combo[-1]]
    cache[combo] = out
    return out


def _minimal_basis_at(M: MilnorData, threshold: Fraction) -> tuple[Mono, ...]:
    """Divisibility-minimal basis monomials with alpha(v) >= threshold.

    A basis monomial divisible by another one above the threshold only
    contributes a redundant generator, so it is pruned; cached because
    the same thresholds recur across nearby levels.
    """
    with M._lock:
        hit = M._minvs.get(threshold)
    if hit is not None:
        return hit
    vs = [v for v, a in zip(M.basis, M.alpha_list) if a >= threshold]
    result = tuple(minimal_monomials(vs))
    with M._lock:
        M._minvs.setdefault(threshold, result)
        return M._minvs[threshold]


def v_level(M: MilnorData, alpha: Fraction) -> VLevel:
    """Filtration level at alpha, cached per Milnor datum."""
    alpha = Fraction(alpha)
    with M._lock:
        hit = M._levels.get(alpha)
    if hit is not None:
        return hit

    n = M.n
    k_top = max(0, math.ceil(alpha - mlct(M)))
    ycache: dict = {}
    triples: list[tuple[Mono, tuple[int, ...], Polynomial]] = []
    one = (0,) * n
    for k in range(k_top):
        vs = _minimal_basis_at(M, alpha - k)
        if not vs:
            continue
        for combo in combinations_with_replacement(range(n), k):
            y = _y_power(M, ycache, combo)
            nu = [0] * n
            for i in combo:
                nu[i] += 1
            nu_t = tuple(nu)
            for v in vs:
                triples.append((v, nu_t, y.mul_monomial(v)))
    for combo in combinations_with_replacement(range(n), k_top):
        y = _y_power(M, ycache, combo)
        nu = [0] * n
        for i in combo:
            nu[i] += 1
        triples.append((one, tuple(nu), y))

    ideal = IdealHandle(M.ring, [t[2] for t in triples], GREVLEX)
    level = VLevel(alpha=alpha, generators=tuple(triples), ideal=ideal)
    with M._lock:
        M._levels.setdefault(alpha, level)
        return M._levels[alpha]


def v_member(M: MilnorData, g: Polynomial, alpha: Fraction) -> bool:
    """Ideal membership of g in the level at alpha."""
    return v_level(M, alpha).ideal.contains(g)


def distinct_alphas(M: MilnorData) -> tuple[Fraction, ...]:
    return tuple(sorted(set(M.alpha_list)))


def candidate_grid(M: MilnorData, ceiling: Fraction) -> tuple[Fraction, ...]:
    """All values alpha(v_j) + k (k in N) up to the ceiling, sorted."""
    ceiling = Fraction(ceiling)
    grid = set()
    for a in distinct_alphas(M):
        k = 0
        while a + k <= ceiling:
            grid.add(a + k)
            k += 1
    return tuple(sorted(grid))


def next_candidate(M: MilnorData, alpha: Fraction) -> Fraction:
    """Smallest candidate value strictly greater than alpha."""
    alpha = Fraction(alpha)
    best: Optional[Fraction] = None
    for a in distinct_alphas(M):
        # smallest k in N with a + k > alpha
        k = max(0, math.floor(alpha - a) + 1)
        value = a + k
        if best is None or value < best:
            best = value
    assert best is not None
    return best


def is_candidate(M: MilnorData, alpha: Fraction) -> bool:
    alpha = Fraction(alpha)
    return any(
        alpha >= a and (alpha - a).denominator == 1 for a in distinct_alphas(M)
    )


def v_order(M: MilnorData, g: Polynomial, ceiling: Fraction) -> Optional[Fraction]:
    """Largest candidate c <= ceiling with g in the level at c.

    Returns None when g still lies in the topmost candidate level (the
    order is then above the search ceiling and not certified).  Levels
    are constant between candidates, so the grid search is exhaustive;
    membership is monotone along the grid, so bisection applies.
    """
    if g.is_zero:
        raise InvalidInputError("the zero polynomial has no filtration order")
    grid = candidate_grid(M, ceiling)
    if not grid:
        return None
    if v_member(M, g, grid[-1]):
        return None
    lo, hi = 0, len(grid) - 1
    # invariant: member at grid[lo], not member at grid[hi]
    assert v_member(M, g, grid[lo]), "nonzero element missing at the mlct level"
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if v_member(M, g, grid[mid]):
            lo = mid
        else:
            hi = mid
    return grid[lo]


def _codim(M: MilnorData, alpha: Fraction) -> int:
    alpha = Fraction(alpha)
    with M._lock:
        hit = M._codims.get(alpha)
    if hit is not None:
        return hit
    value = quotient_dim(v_level(M, alpha).ideal)
    with M._lock:
        M._codims.setdefault(alpha, value)
        return M._codims[alpha]


def gr_dim_direct(M: MilnorData, alpha: Fraction) -> int:
    """Graded dimension at a candidate alpha from two level codimensions."""
    alpha = Fraction(alpha)
    if not is_candidate(M, alpha):
        raise InvalidInputError(f"{alpha} is not in the candidate grid")
    return _codim(M, next_candidate(M, alpha)) - _codim(M, alpha)


def gr_dim_formula(M: MilnorData, alpha: Fraction) -> int:
    """Graded dimension as the binomial-weighted spectrum sum.

    dim = sum over k >= 0 of C(n + k - 1, n - 1) * n_{alpha - k}, a finite
    sum because spectral multiplicities vanish below the mlct.
    """
    alpha = Fraction(alpha)
    sp = spectrum(M)
    low = mlct(M)
    n = M.n
    total = 0
    k = 0
    while alpha - k >= low:
        total += comb(n + k - 1, n - 1) * sp.multiplicity(alpha - k)
        k += 1
    return total


def jumping_numbers(M: MilnorData, ceiling: Fraction) -> JumpList:
    """Candidates <= ceiling where the filtration strictly drops."""
    ceiling = Fraction(ceiling)
    if ceiling <= 0:
        raise InvalidInputError("ceiling must be positive")
    grid = candidate_grid(M, ceiling)
    entries = []
    for c in grid:
        d = _codim(M, next_candidate(M, c)) - _codim(M, c)
        if d > 0:
            entries.append((c, d))
    return JumpList(entries=tuple(entries), ceiling=ceiling)


def hodge_floor(M: MilnorData) -> int:
    """Smallest p with a non-unit level at p + 1; equals floor(mlct).

    Verified against the unit-ideal transitions: 1 is a member at p + 1
    for every p below the floor and a non-member right at it.
    """
    fl = math.floor(mlct(M))
    one = M.ring.one()
    for p in range(fl):
        assert v_member(M, one, Fraction(p + 1)), "unit ideal lost too early"
    assert not v_member(M, one, Fraction(fl + 1)), "unit ideal persists too long"
    return fl


def multiplier_ideal(M: MilnorData, alpha: Fraction) -> IdealHandle:
    """Multiplier ideal at 0 < alpha < 1 via the filtration.

    Off the jumping numbers the multiplier ideal is the level itself; at
    a jumping number it is the right limit, the level at the next
    candidate.  Indices >= 1 are refused: the identification with the
    filtration computed here is only certified below 1.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise InvalidInputError(
            "multiplier ideals are certified only for 0 < alpha < 1"
        )
    if is_candidate(M, alpha) and gr_dim_direct(M, alpha) > 0:
        return v_level(M, next_candidate(M, alpha)).ideal
    return v_level(M, alpha).ideal
