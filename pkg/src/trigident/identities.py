"""Identity statements over power-sum brackets, and their verification.

The brackets are power sums of two specific zero-sum triples of linear
forms in a, b, c, d:

    triple one:  x1 = b + c + d,   y1 = -(a + b + c),   z1 = a - d
    triple two:  x2 = a + c + d,   y2 = -(a + b + d),   z2 = b - c

    A(n) = x1^n + y1^n + z1^n
    B(n) = x2^n + y2^n + z2^n
    D(n) = A(n) - B(n)

Each triple sums to zero, so for odd n the bracket expands to a six-term
(or three-term) alternating sum of n-th powers; the classical degree
(6, 10, 8) product identity lives over D under the side condition
a*d = b*c.

An IdentityStatement asserts lhs == rhs for expressions built from
rationals, the variables, brackets, +, -, *, and integer powers, optionally
assuming a*d - b*c = 0.  ``verify`` decides the statement symbolically:
expand both sides to polynomials, subtract, eliminate d via d := b*c/a
(clearing denominators) when the constraint is assumed, and test for the
zero polynomial.  ``spot_check`` corroborates numerically with exact
rational sampling and never expands anything on the passing path.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .algebra import Polynomial

# ----------------------------------------------------------------------
# expression AST


class BracketKind(Enum):
    D = "D"
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Bracket:
    kind: BracketKind
    power: int


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: int


Expr = Union[Num, Var, Bracket, Add, Sub, Mul, Pow]


@dataclass(frozen=True)
class IdentityStatement:
    """An equation, optionally under the side condition a*d - b*c = 0.

    The name labels reports and catalog lookups; it does not participate
    in equality, so a re-parsed rendering compares equal to the original.
    """

    name: str = field(compare=False)
    lhs: Expr
    rhs: Expr
    constrained: bool


# ----------------------------------------------------------------------
# bracket polynomials

_A_POLY = Polynomial.variable("a")
_B_POLY = Polynomial.variable("b")
_C_POLY = Polynomial.variable("c")
_D_POLY = Polynomial.variable("d")

_TRIPLE_ONE = (
    _B_POLY + _C_POLY + _D_POLY,
    -(_A_POLY + _B_POLY + _C_POLY),
    _A_POLY - _D_POLY,
)
_TRIPLE_TWO = (
    _A_POLY + _C_POLY + _D_POLY,
    -(_A_POLY + _B_POLY + _D_POLY),
    _B_POLY - _C_POLY,
)


@lru_cache(maxsize=None)
def bracket_poly(kind: BracketKind, power: int) -> Polynomial:
    """Expanded polynomial of one bracket; homogeneous of degree ``power``."""
    if power < 0:
        raise ValueError(f"bracket power must be non-negative, got {power}")
    if kind is BracketKind.D:
        return bracket_poly(BracketKind.A, power) - bracket_poly(BracketKind.B, power)
    triple = _TRIPLE_ONE if kind is BracketKind.A else _TRIPLE_TWO
    return triple[0] ** power + triple[1] ** power + triple[2] ** power


# ----------------------------------------------------------------------
# evaluation routes

Point = tuple[Fraction, Fraction, Fraction, Fraction]


def expr_to_poly(expr: Expr) -> Polynomial:
    """Fully expanded polynomial of an expression."""
    if isinstance(expr, Num):
        return Polynomial.constant(expr.value)
    if isinstance(expr, Var):
        return Polynomial.variable(expr.name)
    if isinstance(expr, Bracket):
        return bracket_poly(expr.kind, expr.power)
    if isinstance(expr, Add):
        return expr_to_poly(expr.left) + expr_to_poly(expr.right)
    if isinstance(expr, Sub):
        return expr_to_poly(expr.left) - expr_to_poly(expr.right)
    if isinstance(expr, Mul):
        return expr_to_poly(expr.left) * expr_to_poly(expr.right)
    if isinstance(expr, Pow):
        return expr_to_poly(expr.base) ** expr.exponent
    raise TypeError(f"not an expression node: {expr!r}")


def expr_value(expr: Expr, point: Point) -> Fraction:
    """Exact value at a rational point, computed without polynomial expansion.

    Brackets are evaluated by powering the three linear-form values directly,
    so this route is independent of ``expr_to_poly`` and of the symbolic
    verifier that builds on it.
    """
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Var):
        return point["abcd".index(expr.name)]
    if isinstance(expr, Bracket):
        return _bracket_value(expr.kind, expr.power, point)
    if isinstance(expr, Add):
        return expr_value(expr.left, point) + expr_value(expr.right, point)
    if isinstance(expr, Sub):
        return expr_value(expr.left, point) - expr_value(expr.right, point)
    if isinstance(expr, Mul):
        return expr_value(expr.left, point) * expr_value(expr.right, point)
    if isinstance(expr, Pow):
        return expr_value(expr.base, point) ** expr.exponent
    raise TypeError(f"not an expression node: {expr!r}")


def _bracket_value(kind: BracketKind, power: int, point: Point) -> Fraction:
    a, b, c, d = point
    if kind is BracketKind.D:
        one = _bracket_value(BracketKind.A, power, point)
        two = _bracket_value(BracketKind.B, power, point)
        return one - two
    if kind is BracketKind.A:
        x, y, z = b + c + d, -(a + b + c), a - d
    else:
        x, y, z = a + c + d, -(a + b + d), b - c
    return x ** power + y ** power + z ** power


# ----------------------------------------------------------------------
# verification


class Verdict(Enum):
    PROVED = "PROVED"
    FALSIFIED = "FALSIFIED"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a symbolic verification or a numeric spot check.

    reduced_terms is the term count of the reduced difference polynomial;
    it is 0 exactly when the verdict is PROVED, and a witness point is
    present exactly when the verdict is FALSIFIED.  elapsed is wall time
    in seconds.
    """

    name: str
    verdict: Verdict
    witness: Optional[Point]
    reduced_terms: int
    elapsed: float


def reduce_difference(statement: IdentityStatement) -> Polynomial:
    """lhs - rhs as a polynomial, with d eliminated when constrained.

    Under the constraint the substitution d := b*c/a is applied and
    denominators are cleared, so the result vanishes identically exactly
    when the statement holds on the a != 0 chart of the constraint surface.
    """
    difference = expr_to_poly(statement.lhs) - expr_to_poly(statement.rhs)
    if statement.constrained:
        return difference.substitute_clear("d", _B_POLY * _C_POLY, _A_POLY)
    return difference


def verify(statement: IdentityStatement, seed: int = 0) -> VerificationReport:
    """Symbolic verdict; a FALSIFIED verdict carries a concrete witness."""
    start = time.perf_counter()
    reduced = reduce_difference(statement)
    if not reduced:
        return VerificationReport(
            statement.name, Verdict.PROVED, None, 0, time.perf_counter() - start
        )
    witness = _search_witness(statement, random.Random(seed))
    return VerificationReport(
        statement.name,
        Verdict.FALSIFIED,
        witness,
        len(reduced.terms),
        time.perf_counter() - start,
    )


def spot_check(statement: IdentityStatement, trials: int = 100, seed: int = 0) -> VerificationReport:
    """Exact rational sampling of both sides at random admissible points.

    Free coordinates are nonzero rationals with numerator and denominator
    bounded by 9; for a constrained statement the fourth coordinate is
    derived as d = b*c/a so every point satisfies a*d = b*c exactly.  The
    passing path never expands a polynomial; on a failure the reduced
    difference is expanded once so the report's term count stays truthful.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    start = time.perf_counter()
    rng = random.Random(seed)
    for _ in range(trials):
        point = _sample_point(statement.constrained, rng)
        if expr_value(statement.lhs, point) != expr_value(statement.rhs, point):
            reduced = reduce_difference(statement)
            return VerificationReport(
                statement.name,
                Verdict.FALSIFIED,
                point,
                len(reduced.terms),
                time.perf_counter() - start,
            )
    return VerificationReport(
        statement.name, Verdict.PROVED, None, 0, time.perf_counter() - start
    )


def _sample_point(constrained: bool, rng: random.Random) -> Point:
    if constrained:
        a, b, c = (_nonzero_rational(rng) for _ in range(3))
        return (a, b, c, b * c / a)
    return tuple(_nonzero_rational(rng) for _ in range(4))


def _nonzero_rational(rng: random.Random) -> Fraction:
    numerator = 0
    while numerator == 0:
        numerator = rng.randint(-9, 9)
    return Fraction(numerator, rng.randint(1, 9))


def _search_witness(statement: IdentityStatement, rng: random.Random) -> Point:
    # The reduced difference is a nonzero polynomial, so random rational
    # points miss its zero set with overwhelming probability; a handful of
    # draws always suffices in practice.
    for _ in range(100000):
        point = _sample_point(statement.constrained, rng)
        if expr_value(statement.lhs, point) != expr_value(statement.rhs, point):
            return point
    raise RuntimeError(f"no witness found for {statement.name}")


# ----------------------------------------------------------------------
# report rendering


def render_report(report: VerificationReport) -> str:
    """One-line verdict, e.g. ``PROVED ramanujan-6-10-8 reduced_terms=0 elapsed=1.2ms``."""
    if report.verdict is Verdict.PROVED:
        return (
            f"PROVED {report.name} reduced_terms={report.reduced_terms}"
            f" elapsed={report.elapsed * 1000.0:.1f}ms"
        )
    witness = ",".join(str(v) for v in report.witness)
    return f"FALSIFIED {report.name} witness=({witness})"


def report_json(report: VerificationReport) -> str:
    payload = {
        "verdict": report.verdict.value,
        "name": report.name,
        "reduced_terms": report.reduced_terms,
        "elapsed_ms": round(report.elapsed * 1000.0, 3),
        "witness": None
        if report.witness is None
        else [str(v) for v in report.witness],
    }
    return json.dumps(payload, separators=(",", ":"))


# ----------------------------------------------------------------------
# built-in catalog


def _num(value: int) -> Num:
    return Num(Fraction(value))


def _product(*factors: Expr) -> Expr:
    result = factors[0]
    for factor in factors[1:]:
        result = Mul(result, factor)
    return result


def _quadratic(first: str, second: str) -> Expr:
    # first^2 + first*second + second^2, shaped exactly as the parser
    # shapes the corresponding source text.
    return Add(
        Add(Pow(Var(first), 2), Mul(Var(first), Var(second))),
        Pow(Var(second), 2),
    )


def catalog() -> list[IdentityStatement]:
    """The five built-in statements, in a fixed order.

    * ramanujan-6-10-8: the classical (6, 10, 8) product of six-term
      brackets, 64*D(6)*D(10) == 45*D(8)^2 under a*d = b*c.
    * gen-3-7-5-six: its (3, 7, 5) sibling over the same brackets.
    * gen-3-7-5-three: the (3, 7, 5) identity over the first triple alone,
      with no side condition.
    * asym-6-8-factored: an asymmetric consequence relating D(6) and D(8)
      through two quadratic factors.
    * asym-6-8-r2: the same content with the quadratics repackaged as the
      degree-2 sum bracket, 4*A(2)*D(6) == 3*D(8).
    """
    def d(n: int) -> Bracket:
        return Bracket(BracketKind.D, n)

    def a(n: int) -> Bracket:
        return Bracket(BracketKind.A, n)

    return [
        IdentityStatement(
            "ramanujan-6-10-8",
            _product(_num(64), d(6), d(10)),
            Mul(_num(45), Pow(d(8), 2)),
            constrained=True,
        ),
        IdentityStatement(
            "gen-3-7-5-six",
            _product(_num(25), d(3), d(7)),
            Mul(_num(21), Pow(d(5), 2)),
            constrained=True,
        ),
        IdentityStatement(
            "gen-3-7-5-three",
            _product(_num(25), a(3), a(7)),
            Mul(_num(21), Pow(a(5), 2)),
            constrained=False,
        ),
        IdentityStatement(
            "asym-6-8-factored",
            _product(_num(8), _quadratic("a", "b"), _quadratic("a", "c"), d(6)),
            _product(_num(3), Pow(Var("a"), 2), d(8)),
            constrained=True,
        ),
        IdentityStatement(
            "asym-6-8-r2",
            _product(_num(4), a(2), d(6)),
            Mul(_num(3), d(8)),
            constrained=True,
        ),
    ]


CATALOG_DESCRIPTIONS: dict[str, str] = {
    "ramanujan-6-10-8": "64*D(6)*D(10) == 45*D(8)^2 assuming a*d = b*c",
    "gen-3-7-5-six": "25*D(3)*D(7) == 21*D(5)^2 assuming a*d = b*c",
    "gen-3-7-5-three": "25*A(3)*A(7) == 21*A(5)^2, unconditional",
    "asym-6-8-factored": "8*(a^2+a*b+b^2)*(a^2+a*c+c^2)*D(6) == 3*a^2*D(8) assuming a*d = b*c",
    "asym-6-8-r2": "4*A(2)*D(6) == 3*D(8) assuming a*d = b*c",
}


def catalog_entry(name: str) -> IdentityStatement:
    """Catalog lookup by name; raises KeyError for unknown names."""
    for statement in catalog():
        if statement.name == name:
            return statement
    raise KeyError(name)
