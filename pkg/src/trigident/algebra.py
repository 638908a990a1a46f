"""Exact sparse polynomial arithmetic over the rationals in a, b, c, d.

A polynomial is stored as a mapping from monomials to nonzero Fraction
coefficients.  A monomial is a 4-tuple of non-negative exponents, one per
variable in the fixed order (a, b, c, d).  The zero polynomial stores no
terms at all, so structural equality of the term mappings coincides with
mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

VARIABLES: tuple[str, str, str, str] = ("a", "b", "c", "d")

Monomial = tuple[int, int, int, int]
Scalar = Union[int, Fraction]

_ZERO_MONOMIAL: Monomial = (0, 0, 0, 0)


def _order_key(monomial: Monomial) -> tuple[int, tuple[int, ...]]:
    # Ascending sort on this key lists terms in descending graded
    # reverse-lexicographic order: higher total degree first, ties broken so
    # that the monomial whose rightmost differing exponent is smaller wins.
    # The degree-2 six-term bracket therefore renders as "6*b*c - 6*a*d".
    return (-sum(monomial), tuple(reversed(monomial)))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: dict[Monomial, Fraction] = {}
        for monomial, coefficient in items:
            monomial = tuple(monomial)
            if len(monomial) != len(VARIABLES) or any(e < 0 or not isinstance(e, int) for e in monomial):
                raise ValueError(f"bad monomial {monomial!r}")
            value = canonical.get(monomial, Fraction(0)) + Fraction(coefficient)
            if value:
                canonical[monomial] = value
            else:
                canonical.pop(monomial, None)
        self._terms = canonical

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls({_ZERO_MONOMIAL: Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        index = VARIABLES.index(name)
        exponents = [0, 0, 0, 0]
        exponents[index] = 1
        return cls({tuple(exponents): Fraction(1)})

    # ------------------------------------------------------------------
    # inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """Read-only view of the canonical term mapping (no zero coefficients)."""
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in the canonical rendering order (graded, then reverse-lex)."""
        return [(m, self._terms[m]) for m in sorted(self._terms, key=_order_key)]

    def degree_in(self, name: str) -> int:
        """Largest exponent of one variable; 0 for polynomials not involving it."""
        index = VARIABLES.index(name)
        return max((m[index] for m in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _coerce(other)
        merged = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            value = merged.get(monomial, Fraction(0)) + coefficient
            if value:
                merged[monomial] = value
            else:
                merged.pop(monomial, None)
        return _wrap(merged)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return _wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _coerce(other)
        product: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                value = product.get(monomial, Fraction(0)) + c1 * c2
                if value:
                    product[monomial] = value
                else:
                    product.pop(monomial, None)
        return _wrap(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # evaluation and substitution

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a 4-tuple of rationals, in (a, b, c, d) order."""
        if len(point) != len(VARIABLES):
            raise ValueError(f"point must have {len(VARIABLES)} entries")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for monomial, coefficient in self._terms.items():
            term = coefficient
            for value, exponent in zip(values, monomial):
                if exponent:
                    term *= value ** exponent
            total += term
        return total

    def substitute_clear(self, name: str, numerator: Polynomial, denominator: Polynomial) -> Polynomial:
        """Substitute name := numerator/denominator and clear denominators.

        Returns denominator**k * p(..., name := numerator/denominator, ...)
        where k is the degree of p in the substituted variable, so the result
        is again a polynomial.  The replacement polynomials must not involve
        the substituted variable.  A polynomial with k = 0 is returned
        unchanged, and the result is the zero polynomial exactly when p
        vanishes identically on the locus denominator * name = numerator
        (away from denominator = 0).
        """
        index = VARIABLES.index(name)
        if numerator.degree_in(name) or denominator.degree_in(name):
            raise ValueError(f"replacement for {name} must not involve {name}")
        k = self.degree_in(name)
        if k == 0:
            return self
        numerator_powers = _powers(numerator, k)
        denominator_powers = _powers(denominator, k)
        result = Polynomial.zero()
        for monomial, coefficient in self._terms.items():
            e = monomial[index]
            stripped = list(monomial)
            stripped[index] = 0
            base = Polynomial({tuple(stripped): coefficient})
            result = result + base * numerator_powers[e] * denominator_powers[k - e]
        return result

    # ------------------------------------------------------------------
    # rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for monomial, coefficient in self.sorted_terms():
            body = _render_term(monomial, abs(coefficient))
            if not pieces:
                pieces.append(body if coefficient > 0 else "-" + body)
            else:
                pieces.append((" + " if coefficient > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coerce(value: Polynomial | Scalar) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")


def _wrap(terms: dict[Monomial, Fraction]) -> Polynomial:
    # Internal fast path: terms is already canonical.
    poly = Polynomial.__new__(Polynomial)
    poly._terms = terms
    return poly


def _powers(poly: Polynomial, up_to: int) -> list[Polynomial]:
    powers = [Polynomial.constant(1)]
    for _ in range(up_to):
        powers.append(powers[-1] * poly)
    return powers


def _render_term(monomial: Monomial, magnitude: Fraction) -> str:
    factors = [
        name if exponent == 1 else f"{name}^{exponent}"
        for name, exponent in zip(VARIABLES, monomial)
        if exponent
    ]
    if not factors:
        return str(magnitude)
    if magnitude != 1:
        factors.insert(0, str(magnitude))
    return "*".join(factors)
