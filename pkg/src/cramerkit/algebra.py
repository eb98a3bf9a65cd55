"""Exact scalar arithmetic: arbitrary-precision rationals and sparse
multivariate polynomials over the commuting symbols a[i,j] and b[i].

Rationals are ``fractions.Fraction`` (already canonical: reduced, positive
denominator, zero stored as 0/1).  Polynomials carry arbitrary-precision
*integer* coefficients; rationals only show up when a polynomial is
evaluated or two polynomial sums are divided downstream.

Canonical form
--------------
* Symbols are totally ordered by (kind, row, col) with every a[...] before
  every b[...].
* A monomial is a tuple of (symbol, exponent) pairs, sorted by symbol, with
  no zero exponents; () is the constant monomial.
* Polynomial terms are kept in a map monomial -> nonzero coefficient; two
  polynomials are equal exactly when their canonical representations are
  identical.
* For rendering, terms are listed with the lexicographically largest
  exponent vector first (leading-term-first).  The direction is a
  convention; what matters is that it is fixed, so rendered output is
  bit-stable and can be compared as strings.

Rendering: ``-3*a[1,2]*a[2,1]*b[2]`` style -- integer coefficient (omitted
when +/-1 on a non-constant monomial), symbols joined by ``*`` in symbol
order, ``^e`` for exponents above 1, terms joined by `` + `` / `` - ``, and
``"0"`` for the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping, Union

Rational = Fraction


@dataclass(frozen=True, order=True)
class Symbol:
    """One commuting indeterminate: a[row,col] (kind "a") or b[row] (kind "b")."""

    kind: str
    row: int
    col: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("a", "b"):
            raise ValueError(f"symbol kind must be 'a' or 'b', got {self.kind!r}")
        if self.row < 1:
            raise ValueError(f"symbol row must be >= 1, got {self.row}")
        if self.kind == "a" and self.col < 1:
            raise ValueError(f"a-symbol col must be >= 1, got {self.col}")
        if self.kind == "b" and self.col != 0:
            raise ValueError("b-symbols carry no column index")

    def __str__(self) -> str:
        if self.kind == "a":
            return f"a[{self.row},{self.col}]"
        return f"b[{self.row}]"


def a_symbol(row: int, col: int) -> Symbol:
    return Symbol("a", row, col)


def b_symbol(row: int) -> Symbol:
    return Symbol("b", row)


#: A monomial: ((symbol, exponent), ...) sorted by symbol, exponents >= 1.
Monomial = tuple[tuple[Symbol, int], ...]


def make_monomial(exponents: Mapping[Symbol, int]) -> Monomial:
    """Canonicalize a symbol -> exponent map (zero exponents dropped)."""
    for sym, exp in exponents.items():
        if exp < 0:
            raise ValueError(f"negative exponent {exp} for {sym}")
    return tuple(sorted((s, e) for s, e in exponents.items() if e != 0))


def _mul_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    # merge of two sorted pair lists, adding exponents
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        if s1 == s2:
            out.append((s1, e1 + e2))
            i += 1
            j += 1
        elif s1 < s2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _compare_monomials(m1: Monomial, m2: Monomial) -> int:
    """Compare exponent vectors lexicographically in symbol order.

    Returns 1 when m1's vector is the larger one.  Walking the sorted pair
    lists is equivalent to comparing the (mostly zero) dense vectors: at the
    first symbol where the exponents differ, a present symbol beats an
    absent one.
    """
    i = j = 0
    while i < len(m1) and j < len(m2):
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        if s1 == s2:
            if e1 != e2:
                return 1 if e1 > e2 else -1
            i += 1
            j += 1
        elif s1 < s2:
            return 1
        else:
            return -1
    if i < len(m1):
        return 1
    if j < len(m2):
        return -1
    return 0


_MONOMIAL_KEY = cmp_to_key(_compare_monomials)


def _render_monomial(mono: Monomial, coeff: int) -> str:
    syms = [str(s) if e == 1 else f"{s}^{e}" for s, e in mono]
    if not syms:
        return str(coeff)
    if coeff == 1:
        return "*".join(syms)
    if coeff == -1:
        return "-" + "*".join(syms)
    return "*".join([str(coeff)] + syms)


class Polynomial:
    """Immutable sparse polynomial in canonical form.

    Supports +, -, * against other polynomials and plain ints, so generic
    summation code can start from the integers 0 and 1.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        data = {m: c for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "_terms", data)

    @classmethod
    def _from_owned(cls, terms: dict) -> "Polynomial":
        # internal: takes ownership, zero coefficients already dropped
        p = cls.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({(): int(c)})

    @classmethod
    def from_symbol(cls, sym: Symbol) -> "Polynomial":
        return cls({((sym, 1),): 1})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            new = terms.get(m, 0) + c
            if new:
                terms[m] = new
            else:
                del terms[m]
        return Polynomial._from_owned(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_owned({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prod: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mul_monomials(m1, m2)
                new = prod.get(m, 0) + c1 * c2
                if new:
                    prod[m] = new
                elif m in prod:
                    del prod[m]
        return Polynomial._from_owned(prod)

    __rmul__ = __mul__

    # -- value interface ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order, leading monomial first."""
        return sorted(
            self._terms.items(), key=lambda t: _MONOMIAL_KEY(t[0]), reverse=True
        )

    def symbols(self) -> set[Symbol]:
        return {s for mono in self._terms for s, _ in mono}

    def evaluate(self, assignment: Mapping[Symbol, Fraction | int]) -> Fraction:
        """Substitute an exact rational for every symbol.

        Raises KeyError when the assignment misses a symbol of this
        polynomial.
        """
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            val = Fraction(coeff)
            for sym, exp in mono:
                if sym not in assignment:
                    raise KeyError(f"assignment has no value for {sym}")
                val *= Fraction(assignment[sym]) ** exp
            total += val
        return total

    def render(self) -> str:
        """Bit-stable text form (see the module docstring for the grammar)."""
        ordered = self.terms()
        if not ordered:
            return "0"
        pieces = [_render_monomial(*ordered[0])]
        for mono, coeff in ordered[1:]:
            joiner = " + " if coeff > 0 else " - "
            pieces.append(joiner + _render_monomial(mono, abs(coeff)))
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"


def _coerce(value: "Polynomial | int") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return NotImplemented  # type: ignore[return-value]


Scalar = Union[Fraction, Polynomial]


def render_scalar(x: Scalar) -> str:
    """Canonical text for either scalar kind ("p/q" / "n" for rationals)."""
    if isinstance(x, Polynomial):
        return x.render()
    return str(x)


# -- operation aliases -------------------------------------------------------
# The arithmetic lives on the types above; these names give the flat
# call-style surface used elsewhere and in the tests.


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_negate(p: Polynomial) -> Polynomial:
    return -p


def evaluate(p: Polynomial, assignment: Mapping[Symbol, Fraction | int]) -> Fraction:
    return p.evaluate(assignment)


def rat_add(x: Fraction, y: Fraction) -> Fraction:
    return x + y


def rat_mul(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def rat_neg(x: Fraction) -> Fraction:
    return -x


def rat_div(x: Fraction, y: Fraction) -> Fraction:
    if y == 0:
        raise ZeroDivisionError("rational division by zero")
    return x / y
