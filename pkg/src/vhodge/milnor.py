"""Milnor algebra, spectrum, and log canonical thresholds.

For a weighted homogeneous polynomial f with an isolated singularity at
the origin, the Milnor algebra is the quotient by the Jacobian ideal
(df/dx_1, ..., df/dx_n); its dimension is the Milnor number mu, and the
shifted weighted degrees alpha(v_j) of a monomial basis (v_j) form the
singularity spectrum.  The minimal spectral number equals the sum of the
weights; this is the microlocal log canonical threshold, and the usual
log canonical threshold is its cap at 1.
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import (
    CoordinatePowerWarning,
    InfiniteQuotientError,
    InvalidInputError,
    NonIsolatedSingularityError,
    NotWeightedHomogeneousError,
    SmoothDivisorError,
)
from .groebner import IdealHandle, quotient_dim, standard_monomials
from .polyring import (
    Mono,
    Polynomial,
    WeightSystem,
    check_weighted_homogeneous,
    infer_weights,
    missing_coordinate_powers,
)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of spectral numbers with multiplicities, sorted ascending."""

    entries: tuple[tuple[Fraction, int], ...]

    @classmethod
    def from_alphas(cls, alphas: Iterable[Fraction]) -> "Spectrum":
        counts: dict[Fraction, int] = {}
        for a in alphas:
            counts[a] = counts.get(a, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.entries)

    def multiplicity(self, alpha: Fraction) -> int:
        alpha = Fraction(alpha)
        for a, mult in self.entries:
            if a == alpha:
                return mult
        return 0

    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(a for a, _ in self.entries)

    def is_symmetric(self, n: int) -> bool:
        """Classical symmetry: multiplicity at alpha equals at n - alpha."""
        return all(self.multiplicity(n - a) == m for a, m in self.entries)

    def __str__(self) -> str:
        return ", ".join(f"{a}:{m}" for a, m in self.entries)


@dataclass(frozen=True, eq=False)
class MilnorData:
    """Milnor algebra data of one weighted homogeneous isolated singularity."""

    f: Polynomial
    weights: WeightSystem
    partials: tuple[Polynomial, ...]
    jacobian: IdealHandle
    mu: int
    basis: tuple[Mono, ...]
    alpha_list: tuple[Fraction, ...]
    # per-instance caches shared by the filtration modules
    _levels: dict = field(default_factory=dict, repr=False, compare=False)
    _hodge_slices: dict = field(default_factory=dict, repr=False, compare=False)
    _codims: dict = field(default_factory=dict, repr=False, compare=False)
    _minvs: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(
        default_factory=threading.Lock, repr=False, compare=False
    )

    @property
    def ring(self):
        return self.f.ring

    @property
    def n(self) -> int:
        return self.f.ring.n


def build_milnor(f: Polynomial, weights: Optional[WeightSystem] = None) -> MilnorData:
    """Validate the input and assemble the Milnor algebra data.

    Weights are inferred when absent.  Rejects smooth divisors (unit
    Jacobian ideal) and non-isolated singularities (infinite-dimensional
    Milnor algebra); a missing pure power x_i^(1/w_i) only warns.
    """
    if f.is_zero or f.is_constant:
        raise InvalidInputError("f must be nonzero and non-constant")
    if weights is None:
        weights = infer_weights(f)
    else:
        if weights.n != f.ring.n:
            raise InvalidInputError("weight count does not match variable count")
        if not check_weighted_homogeneous(f, weights):
            raise NotWeightedHomogeneousError(
                f"{f} is not weighted homogeneous for weights "
                f"{tuple(map(str, weights.weights))}"
            )
    partials = tuple(f.partial_derivative(i) for i in range(f.ring.n))
    jacobian = IdealHandle(f.ring, partials)
    if jacobian.is_unit:
        raise SmoothDivisorError(
            "the Jacobian ideal is the unit ideal: the divisor is smooth at 0"
        )
    try:
        basis = standard_monomials(jacobian)
    except InfiniteQuotientError as exc:
        raise NonIsolatedSingularityError(
            "the singularity is not isolated (infinite Milnor algebra)"
        ) from exc
    gaps = missing_coordinate_powers(f, weights)
    if gaps:
        warnings.warn(
            "generator description assumes pure powers of every variable: "
            + "; ".join(gaps),
            CoordinatePowerWarning,
            stacklevel=2,
        )
    alpha_list = tuple(weights.alpha(v) for v in basis)
    n = f.ring.n
    assert all(0 < a < n for a in alpha_list), "spectral numbers out of (0, n)"
    return MilnorData(
        f=f,
        weights=weights,
        partials=partials,
        jacobian=jacobian,
        mu=len(basis),
        basis=basis,
        alpha_list=alpha_list,
    )


def spectrum(M: MilnorData) -> Spectrum:
    """Multiset of alpha(v_j) over the monomial basis of the Milnor algebra."""
    return Spectrum.from_alphas(M.alpha_list)


def mlct(M: MilnorData) -> Fraction:
    """Microlocal log canonical threshold: the sum of the weights.

    The independent route through the minimal spectral number must agree;
    a mismatch is an internal bug, hence the assertion.
    """
    s = M.weights.total
    assert s == min(M.alpha_list), "weight sum and minimal spectral number differ"
    return s


def lct(M: MilnorData) -> Fraction:
    """Ordinary log canonical threshold: min(1, mlct)."""
    return min(Fraction(1), mlct(M))


def reduced_bs_roots(M: MilnorData) -> tuple[Fraction, ...]:
    """Negated roots of the reduced Bernstein-Sato polynomial.

    For weighted homogeneous isolated singularities these are exactly the
    distinct spectral numbers; they must lie in [mlct, n - mlct].
    """
    roots = tuple(sorted(set(M.alpha_list)))
    low = mlct(M)
    high = M.n - low
    assert all(low <= r <= high for r in roots), "root outside [mlct, n - mlct]"
    return roots
