"""Groebner bases and exact graded linear algebra over the rationals.

Ideals are handled through ``IdealHandle``, which caches a reduced monic
Groebner basis computed by Buchberger's algorithm with the product and
chain criteria.  A set of generators that are all single monomials is
interreduced directly (the minimal monomial generators already form the
reduced basis), which keeps the monomial-ideal workloads cheap.

``GradedSlice`` is the canonical reduced-row-echelon basis of the
weighted-degree-e piece of a homogeneous subspace: rows are monic, pivot
columns are eliminated everywhere else, and rows are sorted by pivot, so
two slices are equal as objects iff they span the same subspace.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DegreeMismatchError, InfiniteQuotientError
from .polyring import (
    Mono,
    Polynomial,
    Ring,
    WeightSystem,
    grevlex_key,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_weighted_degree,
    monomials_up_to_degree,
)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total, multiplicative, global order given by a comparable key."""

    name = "abstract"

    def key(self, m: Mono) -> tuple:
        raise NotImplementedError


@dataclass(frozen=True)
class GrevlexOrder(MonomialOrder):
    name = "grevlex"

    def key(self, m: Mono) -> tuple:
        return grevlex_key(m)


@dataclass(frozen=True)
class WeightedGrevlexOrder(MonomialOrder):
    """Weighted degree first, graded reverse lex tie break."""

    weights: WeightSystem
    name = "weighted-grevlex"

    def key(self, m: Mono) -> tuple:
        return (self.weights.weighted_degree(m), sum(m),
                tuple(-e for e in reversed(m)))


GREVLEX = GrevlexOrder()


# ---------------------------------------------------------------------------
# division and Buchberger
# ---------------------------------------------------------------------------

def _reduce_terms(terms: dict, basis: list, keyf) -> dict:
    """Total normal form of a term dict against (lt, lc, terms) triples."""
    p = dict(terms)
    remainder: dict = {}
    while p:
        m = max(p, key=keyf)
        c = p.pop(m)
        for lt, lc, btems in basis:
            if mono_divides(lt, m):
                shift = mono_div(m, lt)
                scale = c / lc
                for bm, bc in btems.items():
                    if bm == lt:
                        continue
                    mm = mono_mul(bm, shift)
                    s = p.get(mm, Fraction(0)) - scale * bc
                    if s:
                        p[mm] = s
                    else:
                        p.pop(mm, None)
                break
        else:
            remainder[m] = c
    return remainder


def _basis_data(polys: Sequence[Polynomial], keyf) -> list:
    data = []
    for g in polys:
        lt, lc = g.leading(keyf)
        data.append((lt, lc, g.terms))
    return data


def minimal_monomials(monos: Iterable[Mono]) -> list[Mono]:
    """Divisibility-minimal elements of a finite set of exponent tuples.

    The result stays in ascending grevlex order.  Large inputs are
    screened one total-degree level at a time with numpy; within a level
    distinct monomials never divide each other, so only previously kept
    lower-degree monomials can dominate.
    """
    unique = sorted(set(monos), key=grevlex_key)  # ascending degree first
    if not unique:
        return []
    if len(unique) <= 64:
        kept: list[Mono] = []
        for m in unique:
            if not any(mono_divides(k, m) for k in kept):
                kept.append(m)
        return kept

    kept_rows: list[Mono] = []
    kept_arr: Optional[np.ndarray] = None
    i = 0
    while i < len(unique):
        d = mono_degree(unique[i])
        j = i
        while j < len(unique) and mono_degree(unique[j]) == d:
            j += 1
        level = unique[i:j]
        i = j
        if kept_arr is not None:
            arr = np.array(level, dtype=np.int64)
            dominated = (arr[:, None, :] >= kept_arr[None, :, :]).all(2).any(1)
            survivors = [m for m, bad in zip(level, dominated) if not bad]
        else:
            survivors = level
        if survivors:
            kept_rows.extend(survivors)
            kept_arr = np.array(kept_rows, dtype=np.int64)
    return kept_rows


def _clean_generators(generators: Iterable[Polynomial]) -> list[Polynomial]:
    seen = set()
    out = []
    for g in generators:
        if g.is_zero:
            continue
        _, lc = g.leading()
        g = g * (1 / lc)
        key = frozenset(g.items())
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def _reduced_groebner(ring: Ring, generators: Sequence[Polynomial],
                      order: MonomialOrder) -> tuple[Polynomial, ...]:
    keyf = order.key
    live = [g for g in generators if not g.is_zero]
    if not live:
        return ()

    # Monomial generators: the minimal monic monomials already form the
    # reduced basis, with no pair processing needed.
    if all(len(g) == 1 for g in live):
        minimal = minimal_monomials(m for g in live for m in g._terms)
        minimal.sort(key=keyf)
        return tuple(ring.monomial(m) for m in minimal)

    gens = _clean_generators(live)

    # One interreduction pass shrinks the input before pair processing.
    gens.sort(key=lambda g: keyf(g.leading(keyf)[0]))
    G: list[Polynomial] = []
    for g in gens:
        r = _reduce_terms(g.terms, _basis_data(G, keyf), keyf) if G else g.terms
        if r:
            p = Polynomial(ring, r)
            _, lc = p.leading(keyf)
            G.append(p * (1 / lc))

    lts = [g.leading(keyf)[0] for g in G]
    pairs = {(i, j): mono_lcm(lts[i], lts[j])
             for i in range(len(G)) for j in range(i + 1, len(G))}

    while pairs:
        (i, j) = min(pairs, key=lambda p: (keyf(pairs[p]), p))
        lcm_ij = pairs.pop((i, j))
        # Product criterion: coprime leading terms yield a zero reduction.
        if lcm_ij == mono_mul(lts[i], lts[j]):
            continue
        # Chain criterion: some k divides the lcm and both side pairs done.
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(lts[k], lcm_ij):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik not in pairs and jk not in pairs:
                skip = True
                break
        if skip:
            continue
        gi, gj = G[i], G[j]
        ci, cj = gi.coefficient(lts[i]), gj.coefficient(lts[j])
        s = gi.mul_monomial(mono_div(lcm_ij, lts[i]), 1 / ci) - \
            gj.mul_monomial(mono_div(lcm_ij, lts[j]), 1 / cj)
        r = _reduce_terms(s.terms, _basis_data(G, keyf), keyf)
        if r:
            p = Polynomial(ring, r)
            lt, lc = p.leading(keyf)
            p = p * (1 / lc)
            G.append(p)
            lts.append(lt)
            new = len(G) - 1
            for k in range(new):
                pairs[(k, new)] = mono_lcm(lts[k], lts[new])

    # Minimalize, then fully reduce each survivor against the others.
    order_idx = sorted(range(len(G)), key=lambda i: keyf(lts[i]))
    minimal_idx: list[int] = []
    for i in order_idx:
        if not any(mono_divides(lts[k], lts[i]) for k in minimal_idx):
            minimal_idx.append(i)
    reduced: list[Polynomial] = []
    minimal = [G[i] for i in minimal_idx]
    for pos, g in enumerate(minimal):
        others = minimal[:pos] + minimal[pos + 1:]
        r = _reduce_terms(g.terms, _basis_data(others, keyf), keyf)
        p = Polynomial(ring, r)
        _, lc = p.leading(keyf)
        reduced.append(p * (1 / lc))
    reduced.sort(key=lambda g: keyf(g.leading(keyf)[0]))
    return tuple(reduced)


# ---------------------------------------------------------------------------
# ideal handles
# ---------------------------------------------------------------------------

class IdealHandle:
    """Ideal with a lazily computed, cached reduced Groebner basis.

    The handle is immutable apart from the internally synchronized basis
    cache, so concurrent queries observe one consistent basis.
    """

    __slots__ = ("ring", "order", "generators", "_lock", "_gb", "_std")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial],
                 order: MonomialOrder = GREVLEX):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if not g.is_zero:
                gens.append(g)
        self.ring = ring
        self.order = order
        self.generators = tuple(gens)
        self._lock = threading.Lock()
        self._gb: Optional[tuple[Polynomial, ...]] = None
        self._std: Optional[tuple[Mono, ...]] = None

    @property
    def groebner_basis(self) -> tuple[Polynomial, ...]:
        gb = self._gb
        if gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = _reduced_groebner(
                        self.ring, self.generators, self.order
                    )
                gb = self._gb
        return gb

    @property
    def is_zero_ideal(self) -> bool:
        return not self.groebner_basis

    @property
    def is_unit(self) -> bool:
        gb = self.groebner_basis
        return len(gb) == 1 and gb[0].is_constant and not gb[0].is_zero

    def contains(self, g: Polynomial) -> bool:
        return normal_form(g, self).is_zero

    def equals(self, other: "IdealHandle") -> bool:
        """Ideal equality via the canonical reduced bases."""
        if self.ring != other.ring or self.order != other.order:
            raise ValueError("handles from different rings or orders")
        return self.groebner_basis == other.groebner_basis

    def __repr__(self) -> str:
        return f"IdealHandle({', '.join(str(g) for g in self.generators)})"


def buchberger(generators: Iterable[Polynomial],
               order: MonomialOrder = GREVLEX,
               ring: Optional[Ring] = None) -> IdealHandle:
    """Build an ideal handle and compute its reduced basis eagerly."""
    gens = list(generators)
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring from an empty generator list")
        ring = gens[0].ring
    handle = IdealHandle(ring, gens, order)
    handle.groebner_basis
    return handle


def normal_form(g: Polynomial, ideal: IdealHandle) -> Polynomial:
    """Remainder of g modulo the reduced basis; zero iff g is a member."""
    if g.ring != ideal.ring:
        raise ValueError("polynomial from a different ring")
    gb = ideal.groebner_basis
    if not gb:
        return g
    keyf = ideal.order.key
    return Polynomial(g.ring, _reduce_terms(g.terms, _basis_data(gb, keyf), keyf))


def standard_monomials(ideal: IdealHandle,
                       bound: Optional[int] = None) -> tuple[Mono, ...]:
    """Monomials outside the leading-term ideal, ascending grevlex.

    Without a bound the quotient must be finite dimensional (the leading
    ideal contains a pure power of every variable).
    """
    if bound is None and ideal._std is not None:
        return ideal._std
    gb = ideal.groebner_basis
    n = ideal.ring.n
    keyf = ideal.order.key
    lts = [g.leading(keyf)[0] for g in gb]
    if bound is not None:
        candidates = monomials_up_to_degree(n, bound)
        out = tuple(
            sorted(
                (m for m in candidates
                 if not any(mono_divides(lt, m) for lt in lts)),
                key=keyf,
            )
        )
        return out
    if not gb:
        raise InfiniteQuotientError("the zero ideal has an infinite quotient")
    caps = [None] * n
    for lt in lts:
        support = [i for i, e in enumerate(lt) if e]
        if len(support) == 1:
            i = support[0]
            if caps[i] is None or lt[i] < caps[i]:
                caps[i] = lt[i]
        elif not support:
            caps = [0] * n  # unit ideal
            break
    if any(c is None for c in caps):
        raise InfiniteQuotientError(
            "quotient is infinite dimensional (no pure power of some variable)"
        )

    out_list: list[Mono] = []

    def rec(i: int, prefix: tuple[int, ...]):
        if i == n:
            if not any(mono_divides(lt, prefix) for lt in lts):
                out_list.append(prefix)
            return
        for e in range(caps[i]):
            rec(i + 1, prefix + (e,))

    rec(0, ())
    result = tuple(sorted(out_list, key=keyf))
    with ideal._lock:
        ideal._std = result
    return result


def quotient_dim(ideal: IdealHandle) -> int:
    """Vector-space dimension of ring/ideal (finite case only)."""
    return len(standard_monomials(ideal))


def ideal_sum(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    if a.ring != b.ring or a.order != b.order:
        raise ValueError("handles from different rings or orders")
    return IdealHandle(a.ring, a.generators + b.generators, a.order)


def ideal_power(a: IdealHandle, k: int) -> IdealHandle:
    """Ideal generated by all k-fold products of the generators."""
    if k < 0:
        raise ValueError("negative ideal power")
    if k == 0:
        return IdealHandle(a.ring, [a.ring.one()], a.order)
    products = []
    for combo in combinations_with_replacement(a.generators, k):
        p = a.ring.one()
        for g in combo:
            p = p * g
        products.append(p)
    return IdealHandle(a.ring, products, a.order)


# ---------------------------------------------------------------------------
# graded slices
# ---------------------------------------------------------------------------

Row = tuple[tuple[int, Fraction], ...]


class GradedSlice:
    """Canonical echelon basis of a weighted-degree-e subspace.

    ``columns`` is the full monomial basis of the ambient degree-e space
    in descending order; ``rows`` is the unique reduced row echelon form
    of the stored subspace over those columns.
    """

    __slots__ = ("degree", "columns", "rows", "on_grid", "_index")

    def __init__(self, degree: Fraction, columns: tuple[Mono, ...],
                 rows: tuple[Row, ...], on_grid: bool):
        self.degree = degree
        self.columns = columns
        self.rows = rows
        self.on_grid = on_grid
        self._index = None

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return len(self.columns)

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _column_index(self) -> dict[Mono, int]:
        if self._index is None:
            self._index = {m: i for i, m in enumerate(self.columns)}
        return self._index

    def _vector(self, p: Polynomial) -> dict[int, Fraction]:
        index = self._column_index()
        vec: dict[int, Fraction] = {}
        for m, c in p.items():
            col = index.get(m)
            if col is None:
                raise DegreeMismatchError(
                    f"{p} does not live in the degree-{self.degree} slice"
                )
            vec[col] = c
        return vec

    def contains(self, p: Polynomial) -> bool:
        """Exact membership of a degree-e polynomial in the subspace."""
        if p.is_zero:
            return True
        vec = self._vector(p)
        pivots = {row[0][0]: row for row in self.rows}
        while vec:
            col = min(vec)
            row = pivots.get(col)
            if row is None:
                return False
            c = vec.pop(col)
            for rc, rv in row[1:]:
                s = vec.get(rc, Fraction(0)) - c * rv
                if s:
                    vec[rc] = s
                else:
                    vec.pop(rc, None)
        return True

    def basis_polynomials(self, ring: Ring) -> list[Polynomial]:
        out = []
        for row in self.rows:
            out.append(Polynomial(ring, {self.columns[c]: v for c, v in row}))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSlice):
            return NotImplemented
        return (self.degree == other.degree and self.columns == other.columns
                and self.rows == other.rows and self.on_grid == other.on_grid)

    def __hash__(self) -> int:
        return hash((self.degree, self.columns, self.rows, self.on_grid))

    def __repr__(self) -> str:
        return (f"GradedSlice(degree={self.degree}, dim={self.dim}, "
                f"ambient={self.ambient_dim})")


class SliceBuilder:
    """Incremental reduced-row-echelon accumulator for one graded piece."""

    def __init__(self, ring: Ring, weights: WeightSystem, degree: Fraction,
                 columns: Optional[tuple[Mono, ...]] = None):
        self.ring = ring
        self.weights = weights
        self.degree = Fraction(degree)
        if columns is None:
            columns = monomials_of_weighted_degree(weights, self.degree)
        self.columns = columns
        self.index = {m: i for i, m in enumerate(columns)}
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def full(self) -> bool:
        return self.rank == len(self.columns)

    def add(self, p: Polynomial) -> bool:
        """Insert a degree-e polynomial; True if it enlarged the span."""
        if p.is_zero:
            return False
        vec: dict[int, Fraction] = {}
        for m, c in p.items():
            col = self.index.get(m)
            if col is None:
                raise DegreeMismatchError(
                    f"{p} is not homogeneous of weighted degree {self.degree}"
                )
            vec[col] = c
        return self.add_vector(vec)

    def add_vector(self, vec: dict[int, Fraction]) -> bool:
        # Fully reduce: pivot rows only touch columns >= their pivot, and
        # columns are visited in ascending order, so entries parked in
        # ``reduced`` can never be revived by later eliminations.
        vec = dict(vec)
        reduced: dict[int, Fraction] = {}
        while vec:
            col = min(vec)
            row = self.pivots.get(col)
            if row is None:
                reduced[col] = vec.pop(col)
                continue
            c = vec.pop(col)
            for rc, rv in row.items():
                if rc == col:
                    continue
                s = vec.get(rc, Fraction(0)) - c * rv
                if s:
                    vec[rc] = s
                else:
                    vec.pop(rc, None)
        if not reduced:
            return False
        vec = reduced
        pivot = min(vec)
        inv = 1 / vec[pivot]
        vec = {c: v * inv for c, v in vec.items()}
        # Keep full reduction: clear the new pivot from the other rows.
        for other in self.pivots.values():
            coeff = other.get(pivot)
            if coeff is None:
                continue
            for c, v in vec.items():
                s = other.get(c, Fraction(0)) - coeff * v
                if s:
                    other[c] = s
                else:
                    other.pop(c, None)
        self.pivots[pivot] = vec
        return True

    def build(self) -> GradedSlice:
        rows = tuple(
            tuple(sorted(self.pivots[p].items()))
            for p in sorted(self.pivots)
        )
        return GradedSlice(self.degree, self.columns, rows,
                           on_grid=bool(self.columns))


def graded_slice(ideal: IdealHandle, e: Fraction, w: WeightSystem) -> GradedSlice:
    """Canonical echelon basis of the degree-e piece of a graded ideal.

    Every generator must be weighted homogeneous for w; the slice is the
    span of all monomial multiples of basis elements landing in degree e.
    """
    for g in ideal.generators:
        if not g.is_weighted_homogeneous(w):
            raise ValueError(f"generator {g} is not weighted homogeneous")
    e = Fraction(e)
    builder = SliceBuilder(ideal.ring, w, e)
    if builder.columns:
        for g in ideal.groebner_basis:
            dg = g.weighted_degree(w)
            t = e - dg
            if t < 0:
                continue
            for u in monomials_of_weighted_degree(w, t):
                builder.add(g.mul_monomial(u))
            if builder.full:
                break
    return builder.build()


def slice_equal(a: GradedSlice, b: GradedSlice) -> bool:
    """True iff the two slices are the same subspace of the same piece."""
    if a.degree != b.degree or a.columns != b.columns:
        raise DegreeMismatchError("slices live in different graded pieces")
    return a.rows == b.rows


def slice_sum(a: GradedSlice, extra: Iterable[Polynomial], ring: Ring,
              w: WeightSystem) -> GradedSlice:
    """Span of a slice together with additional degree-e polynomials."""
    builder = SliceBuilder(ring, w, a.degree, columns=a.columns)
    for row in a.rows:
        builder.add_vector(dict(row))
    for p in extra:
        if builder.full:
            break
        builder.add(p)
    return builder.build()
