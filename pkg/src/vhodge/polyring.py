"""Exact multivariate polynomial arithmetic over the rationals.

A monomial is an exponent tuple (one non-negative integer per variable)
and a polynomial is a sparse map from exponent tuples to nonzero
``Fraction`` coefficients.  Every computation in this package is exact;
there is no floating point anywhere.

The module also owns weighted-degree bookkeeping (``WeightSystem``) and
the input expression language:

    expr   :=  ['-'] term (('+' | '-') term)*
    term   :=  power ('*' power)*
    power  :=  atom ['^' integer]
    atom   :=  integer ['/' integer] | variable | '(' expr ')'

Variable names match ``[a-z][a-z0-9_]*``, multiplication is always
explicit, ``^`` takes non-negative integer exponents, and whitespace is
ignored.  Canonical printing orders terms by descending graded reverse
lexicographic order and emits parseable text, so parse -> print -> parse
is the identity on polynomial values.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .errors import (
    InconsistentWeightsError,
    NonPositiveWeightsError,
    ParseError,
    UnderdeterminedWeightsError,
    UnknownVariableError,
)

# One exponent per variable; () is only legal in a 0-variable context,
# which this package never constructs.
Mono = tuple

Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def grevlex_key(m: Mono) -> tuple:
    """Sort key realizing graded reverse lex: bigger key = bigger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(m: Mono) -> int:
    return sum(m)


def default_variables(n: int) -> tuple[str, ...]:
    """Conventional variable names: x, y, z, w for n <= 4, else x1..xn."""
    if n <= 4:
        return ("x", "y", "z", "w")[:n]
    return tuple(f"x{i+1}" for i in range(n))


# ---------------------------------------------------------------------------
# ring context and polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring: a fixed, ordered tuple of variable names."""

    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        for name in self.variables:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def n(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.n: c})

    def variable(self, i: int) -> "Polynomial":
        exp = [0] * self.n
        exp[i] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def monomial(self, m: Mono, c: Scalar = 1) -> "Polynomial":
        if len(m) != self.n:
            raise ValueError("exponent tuple has wrong length")
        c = Fraction(c)
        return Polynomial(self, {tuple(m): c} if c else {})

    def monomial_str(self, m: Mono) -> str:
        parts = []
        for name, e in zip(self.variables, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero ``Fraction`` values; the
    zero polynomial is the empty map.  Arithmetic is purely functional,
    so instances are safe to share between threads.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Mono, Scalar]):
        self.ring = ring
        self._terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def from_terms(cls, ring: Ring, terms: Mapping[Mono, Scalar]) -> "Polynomial":
        """Validating constructor for externally supplied term maps."""
        for m in terms:
            if len(m) != ring.n or any(e < 0 or not isinstance(e, int) for e in m):
                raise ValueError(f"bad exponent tuple {m!r}")
        return cls(ring, terms)

    # -- queries ------------------------------------------------------------

    @property
    def terms(self) -> dict[Mono, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Mono, Fraction]]:
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, m: Mono) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def monomials(self) -> list[Mono]:
        """Support in descending graded reverse lex order."""
        return sorted(self._terms, key=grevlex_key, reverse=True)

    def leading(self, key=grevlex_key) -> tuple[Mono, Fraction]:
        """Leading (monomial, coefficient) under the given order key."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=key)
        return m, self._terms[m]

    def weighted_degree(self, w: "WeightSystem") -> Fraction:
        """Common weighted degree of all terms; raises if mixed or zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no weighted degree")
        degs = {w.weighted_degree(m) for m in self._terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not weighted homogeneous")
        return degs.pop()

    def is_weighted_homogeneous(self, w: "WeightSystem") -> bool:
        return len({w.weighted_degree(m) for m in self._terms}) <= 1

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check_ring(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {m: c * v for m, v in self._terms.items()})
        self._check_ring(other)
        out: dict[Mono, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, Fraction(0)) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def mul_monomial(self, m: Mono, c: Scalar = 1) -> "Polynomial":
        """Fast multiplication by a single scaled monomial."""
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring, {mono_mul(t, m): c * v for t, v in self._terms.items()}
        )

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def partial_derivative(self, i: int) -> "Polynomial":
        """Exact formal derivative with respect to the i-th variable."""
        if not 0 <= i < self.ring.n:
            raise ValueError(f"variable index {i} out of range")
        out: dict[Mono, Fraction] = {}
        for m, c in self._terms.items():
            e = m[i]
            if e == 0:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1:]
            out[dm] = out.get(dm, Fraction(0)) + c * e
        return Polynomial(self.ring, out)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for m in self.monomials():
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = self.ring.monomial_str(m)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    return p.partial_derivative(i)


def exact_quotient(g: Polynomial, f: Polynomial) -> Optional[Polynomial]:
    """Return q with g = q*f, or None when f does not divide g exactly."""
    if f.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    g._check_ring(f)
    lt, lc = f.leading()
    rest = [(m, c) for m, c in f.items() if m != lt]
    p = g.terms
    q: dict[Mono, Fraction] = {}
    while p:
        m = max(p, key=grevlex_key)
        if not mono_divides(lt, m):
            return None
        shift = mono_div(m, lt)
        c = p.pop(m) / lc
        q[shift] = c
        for bm, bc in rest:
            mm = mono_mul(bm, shift)
            s = p.get(mm, Fraction(0)) - c * bc
            if s:
                p[mm] = s
            else:
                p.pop(mm, None)
    return Polynomial(g.ring, q)


# ---------------------------------------------------------------------------
# weight systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightSystem:
    """Positive rational weights, one per variable."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "weights", tuple(Fraction(w) for w in self.weights)
        )
        if not self.weights:
            raise ValueError("empty weight system")
        if any(w <= 0 for w in self.weights):
            raise NonPositiveWeightsError(
                f"weights must be positive, got {tuple(map(str, self.weights))}"
            )

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def weighted_degree(self, m: Mono) -> Fraction:
        if len(m) != self.n:
            raise ValueError("dimension mismatch")
        return sum((e * w for e, w in zip(m, self.weights)), Fraction(0))

    def alpha(self, m: Mono) -> Fraction:
        """Shifted weighted degree sum((m_i + 1) * w_i) of a monomial."""
        if len(m) != self.n:
            raise ValueError("dimension mismatch")
        return sum(((e + 1) * w for e, w in zip(m, self.weights)), Fraction(0))

    @property
    def is_homogeneous(self) -> bool:
        """True iff all weights are equal to 1/d for a positive integer d."""
        w = self.weights[0]
        return all(v == w for v in self.weights) and w.numerator == 1

    @property
    def denominator(self) -> int:
        """LCM of the weight denominators: the grid step for degrees."""
        return math.lcm(*(w.denominator for w in self.weights))


def alpha_value(v: Mono, w: WeightSystem) -> Fraction:
    """Shifted weighted degree of the monomial v (exact)."""
    return w.alpha(v)


@lru_cache(maxsize=None)
def monomials_of_weighted_degree(w: WeightSystem, e: Fraction) -> tuple[Mono, ...]:
    """All exponent tuples of weighted degree exactly e, descending grevlex."""
    e = Fraction(e)
    if e < 0:
        return ()
    n = w.n
    out: list[Mono] = []

    def rec(i: int, remaining: Fraction, prefix: tuple[int, ...]):
        if i == n - 1:
            q = remaining / w.weights[i]
            if q.denominator == 1 and q >= 0:
                out.append(prefix + (int(q),))
            return
        wi = w.weights[i]
        top = int(remaining / wi)
        for k in range(top + 1):
            rec(i + 1, remaining - k * wi, prefix + (k,))

    rec(0, e, ())
    out.sort(key=grevlex_key, reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def attainable_degrees(w: WeightSystem, e_max: Fraction) -> tuple[Fraction, ...]:
    """Sorted weighted degrees <= e_max realized by some monomial."""
    e_max = Fraction(e_max)
    reachable = {Fraction(0)}
    for wi in w.weights:
        new = set()
        for d in reachable:
            k = 0
            while d + k * wi <= e_max:
                new.add(d + k * wi)
                k += 1
        reachable = new
    return tuple(sorted(reachable))


def monomials_of_total_degree(n: int, d: int) -> tuple[Mono, ...]:
    """All exponent tuples in n variables of total degree exactly d."""
    return monomials_of_weighted_degree(
        WeightSystem((Fraction(1),) * n), Fraction(d)
    )


def monomials_up_to_degree(n: int, d: int) -> list[Mono]:
    out: list[Mono] = []
    for k in range(d + 1):
        out.extend(monomials_of_total_degree(n, k))
    return out


# ---------------------------------------------------------------------------
# weight inference and structural checks
# ---------------------------------------------------------------------------

def infer_weights(f: Polynomial) -> WeightSystem:
    """Solve sum(m_i * w_i) = 1 over the monomials of f for positive w.

    Raises UnderdeterminedWeightsError, InconsistentWeightsError, or
    NonPositiveWeightsError when there is no unique positive solution.
    """
    if f.is_zero or f.is_constant:
        raise InconsistentWeightsError("f must be nonzero and non-constant")
    n = f.ring.n
    rows = [[Fraction(e) for e in m] + [Fraction(1)] for m in f.monomials()]

    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(col)
        r += 1
    for row in rows[r:]:
        if row[n] != 0:
            raise InconsistentWeightsError(
                "polynomial is not weighted homogeneous for any weights"
            )
    if len(pivot_cols) < n:
        raise UnderdeterminedWeightsError(
            "weights are underdetermined; supply them explicitly"
        )
    solution = [Fraction(0)] * n
    for i, col in enumerate(pivot_cols):
        solution[col] = rows[i][n]
    if any(w <= 0 for w in solution):
        raise NonPositiveWeightsError(
            "unique weight solution is not strictly positive"
        )
    return WeightSystem(tuple(solution))


def check_weighted_homogeneous(f: Polynomial, w: WeightSystem) -> bool:
    """True iff every monomial of f has weighted degree 1.

    When true, the Euler identity sum(w_i * x_i * df/dx_i) = f is also
    asserted; a mismatch would indicate an arithmetic bug.
    """
    if w.n != f.ring.n:
        raise ValueError("dimension mismatch")
    if f.is_zero:
        return False
    ok = all(w.weighted_degree(m) == 1 for m in f._terms)
    if ok:
        euler = f.ring.zero()
        for i, wi in enumerate(w.weights):
            euler = euler + f.partial_derivative(i).mul_monomial(
                tuple(1 if j == i else 0 for j in range(f.ring.n)), wi
            )
        assert euler == f, "Euler identity failed for weighted homogeneous f"
    return ok


def check_coordinate_powers(f: Polynomial, w: WeightSystem) -> bool:
    """True iff every pure power x_i^(1/w_i) occurs in f."""
    return not missing_coordinate_powers(f, w)


def missing_coordinate_powers(f: Polynomial, w: WeightSystem) -> list[str]:
    """Diagnostics naming each variable whose pure power is absent."""
    if w.n != f.ring.n:
        raise ValueError("dimension mismatch")
    problems = []
    for i, wi in enumerate(w.weights):
        inv = 1 / wi
        name = f.ring.variables[i]
        if inv.denominator != 1:
            problems.append(f"1/w for {name} is {inv}, not an integer")
            continue
        a = int(inv)
        mono = tuple(a if j == i else 0 for j in range(f.ring.n))
        if f.coefficient(mono) == 0:
            problems.append(f"missing pure power {name}^{a}")
    return problems


# ---------------------------------------------------------------------------
# expression parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"(?P<int>\d+)|(?P<name>[a-z][a-z0-9_]*)|(?P<op>[-+*^()/])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", i)
        kind = m.lastgroup
        tokens.append((kind, m.group(), i))
        i = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring
        self.var_index = {name: i for i, name in enumerate(ring.variables)}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, value: str):
        kind, text, offset = self.peek()
        if kind != "op" or text != value:
            raise ParseError(f"expected {value!r}", offset)
        self.advance()

    def parse(self) -> Polynomial:
        value = self.expression()
        kind, text, offset = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {text!r}", offset)
        return value

    def expression(self) -> Polynomial:
        kind, text, _ = self.peek()
        negate = False
        if kind == "op" and text in "+-":
            negate = text == "-"
            self.advance()
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.term()
                value = value - rhs if text == "-" else value + rhs
            else:
                return value

    def term(self) -> Polynomial:
        value = self.power()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.advance()
                value = value * self.power()
            else:
                return value

    def power(self) -> Polynomial:
        base = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            kind, text, offset = self.peek()
            if kind != "int":
                raise ParseError("expected a non-negative integer exponent", offset)
            self.advance()
            return base ** int(text)
        return base

    def atom(self) -> Polynomial:
        kind, text, offset = self.advance()
        if kind == "int":
            num = int(text)
            kind2, text2, _ = self.peek()
            if kind2 == "op" and text2 == "/":
                self.advance()
                kind3, text3, offset3 = self.peek()
                if kind3 != "int":
                    raise ParseError("expected an integer denominator", offset3)
                self.advance()
                den = int(text3)
                if den == 0:
                    raise ParseError("zero denominator", offset3)
                return self.ring.constant(Fraction(num, den))
            return self.ring.constant(num)
        if kind == "name":
            idx = self.var_index.get(text)
            if idx is None:
                raise UnknownVariableError(text, offset)
            return self.ring.variable(idx)
        if kind == "op" and text == "(":
            value = self.expression()
            self.expect_op(")")
            return value
        shown = text if text else "end of input"
        raise ParseError(f"unexpected {shown!r}", offset)


def parse_expression(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse text into the ring with the given ordered variable names."""
    ring = Ring(tuple(variables))
    return _Parser(text, ring).parse()


def infer_variables(text: str) -> list[str]:
    """Variable names in order of first appearance in the expression."""
    seen: list[str] = []
    for kind, value, _ in _tokenize(text):
        if kind == "name" and value not in seen:
            seen.append(value)
    return seen
