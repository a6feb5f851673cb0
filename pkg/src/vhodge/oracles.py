"""Independent combinatorial oracles for diagonal polynomials.

For f = sum(x_i^a_i) everything is explicit: the Milnor algebra has the
monomial basis prod(x_i^m_i) with 0 <= m_i <= a_i - 2, each partial
derivative is a scalar times x_i^(a_i - 1), and every filtration level is
a monomial ideal.  No Groebner computation is involved, which makes these
functions a trustworthy cross-check for the general pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterable, Optional, Sequence

from .groebner import minimal_monomials
from .milnor import Spectrum
from .polyring import (
    Mono,
    Polynomial,
    Ring,
    WeightSystem,
    default_variables,
    mono_divides,
)


@dataclass(frozen=True)
class DiagonalSpec:
    """Exponents (a_1, ..., a_n) of a diagonal polynomial sum(x_i^a_i)."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))
        if not self.exponents or any(a < 2 for a in self.exponents):
            raise ValueError("all exponents must be integers >= 2")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def weights(self) -> WeightSystem:
        return WeightSystem(tuple(Fraction(1, a) for a in self.exponents))

    @property
    def mlct(self) -> Fraction:
        return sum((Fraction(1, a) for a in self.exponents), Fraction(0))

    @property
    def mu(self) -> int:
        return math.prod(a - 1 for a in self.exponents)

    def polynomial(self, variables: Optional[Sequence[str]] = None) -> Polynomial:
        names = tuple(variables) if variables else default_variables(self.n)
        ring = Ring(names)
        out = ring.zero()
        for i, a in enumerate(self.exponents):
            out = out + ring.monomial(
                tuple(a if j == i else 0 for j in range(self.n))
            )
        return out

    def _box(self) -> Iterable[Mono]:
        return product(*(range(a - 1) for a in self.exponents))

    def box_alpha(self, m: Mono) -> Fraction:
        return sum(
            (Fraction(e + 1, a) for e, a in zip(m, self.exponents)), Fraction(0)
        )


def as_diagonal_spec(f: Polynomial) -> Optional[DiagonalSpec]:
    """Recognize c_1*x_1^a_1 + ... + c_n*x_n^a_n with all a_i >= 2."""
    seen = [0] * f.ring.n
    for m, _ in f.items():
        support = [i for i, e in enumerate(m) if e]
        if len(support) != 1:
            return None
        i = support[0]
        if seen[i] or m[i] < 2:
            return None
        seen[i] = m[i]
    if not all(seen):
        return None
    return DiagonalSpec(tuple(seen))


@lru_cache(maxsize=None)
def _box_alphas(spec: DiagonalSpec) -> tuple[tuple[Mono, Fraction], ...]:
    return tuple((m, spec.box_alpha(m)) for m in spec._box())


@lru_cache(maxsize=None)
def _box_minimal_at(spec: DiagonalSpec, threshold: Fraction) -> tuple[Mono, ...]:
    level = [m for m, a in _box_alphas(spec) if a >= threshold]
    return tuple(minimal_monomials(level))


def bp_spectrum(spec: DiagonalSpec) -> Spectrum:
    """Spectrum by direct box enumeration: sum((m_i + 1)/a_i) over the box."""
    return Spectrum.from_alphas(a for _, a in _box_alphas(spec))


def bp_candidates(spec: DiagonalSpec, ceiling: Fraction) -> tuple[Fraction, ...]:
    """Grid of box values shifted by non-negative integers, up to ceiling."""
    ceiling = Fraction(ceiling)
    grid = set()
    for a in {a for _, a in _box_alphas(spec)}:
        k = 0
        while a + k <= ceiling:
            grid.add(a + k)
            k += 1
    return tuple(sorted(grid))


def bp_v_generators(spec: DiagonalSpec, alpha: Fraction) -> tuple[Mono, ...]:
    """Minimal monomial generators of the filtration level at alpha.

    Levels are generated by prod(x_i^(nu_i*(a_i-1) + m_i)) over box points
    m and shift vectors nu with box_alpha(m) + |nu| >= alpha, truncated at
    |nu| = K = max(0, ceil(alpha - mlct)) where the pure Jacobian power
    takes over.
    """
    alpha = Fraction(alpha)
    k_top = max(0, math.ceil(alpha - spec.mlct))
    gens: list[Mono] = []
    shifts = [a - 1 for a in spec.exponents]
    for k in range(k_top):
        level = _box_minimal_at(spec, alpha - k)
        if not level:
            continue
        for combo in combinations_with_replacement(range(spec.n), k):
            nu = [0] * spec.n
            for i in combo:
                nu[i] += 1
            offset = tuple(nu[i] * shifts[i] for i in range(spec.n))
            for m in level:
                gens.append(tuple(o + e for o, e in zip(offset, m)))
    for combo in combinations_with_replacement(range(spec.n), k_top):
        nu = [0] * spec.n
        for i in combo:
            nu[i] += 1
        gens.append(tuple(nu[i] * shifts[i] for i in range(spec.n)))
    return tuple(minimal_monomials(gens))


def bp_v_member(spec: DiagonalSpec, v: Mono, alpha: Fraction) -> bool:
    """Monomial membership by divisibility against the truncated generators."""
    if len(v) != spec.n:
        raise ValueError("dimension mismatch")
    return any(mono_divides(g, v) for g in bp_v_generators(spec, alpha))
