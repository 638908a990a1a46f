"""Search for product-equals-square relations among power-sum expansions.

For a shift count N, the search space is pairs m < n <= max_power with
m + n even and p = (m + n) / 2.  Writing Delta_k for either the two-angle
difference f_k(theta1) - f_k(theta2) (DIFFERENCE mode) or the value
f_k(theta) itself (POINTWISE mode), a triple (m, n, p) is reported exactly
when f_m, f_n, f_p each carry a single positive harmonic, the harmonic is
the same h for all three, and in POINTWISE mode no constant term is
present.  Under those conditions

    product_factor * Delta_m * Delta_n == square_factor * Delta_p^2

holds identically, with square_factor / product_factor equal to the
amplitude ratio A_m * A_n / A_p^2 in lowest terms.  The m + n = 2p shape
makes both sides scale as rho^(m + n) when the cosines are scaled by rho,
so each relation extends to arbitrary radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .fourier import Mode, linearize_closed, single_harmonic
from .identities import Bracket, BracketKind, IdentityStatement, Mul, Num, Pow


@dataclass(frozen=True)
class DiscoveryQuery:
    shift_count: int
    max_power: int
    mode: Mode


@dataclass(frozen=True)
class DiscoveredIdentity:
    """One relation product_factor * D_m * D_n == square_factor * D_p^2."""

    m: int
    n: int
    p: int
    harmonic: int
    square_factor: int
    product_factor: int


def derive_constant(
    shift_count: int, m: int, n: int, p: int, mode: Mode
) -> Optional[tuple[int, int]]:
    """(square_factor, product_factor) for the triple, or None.

    None means the triple does not qualify: some expansion has zero or
    several positive harmonics, the harmonics disagree, or (POINTWISE) a
    constant term survives.
    """
    derived = _derive(shift_count, m, n, p, mode)
    if derived is None:
        return None
    _, square_factor, product_factor = derived
    return (square_factor, product_factor)


def _derive(
    shift_count: int, m: int, n: int, p: int, mode: Mode
) -> Optional[tuple[int, int, int]]:
    parts = [
        single_harmonic(linearize_closed(shift_count, power), mode)
        for power in (m, n, p)
    ]
    if any(part is None for part in parts):
        return None
    (h_m, a_m), (h_n, a_n), (h_p, a_p) = parts
    if not (h_m == h_n == h_p):
        return None
    ratio = (a_m * a_n) / (a_p * a_p)
    return (h_m, ratio.numerator, ratio.denominator)


def discover(query: DiscoveryQuery) -> list[DiscoveredIdentity]:
    """All qualifying triples, sorted by (p, m, n); deterministic."""
    if query.shift_count < 1:
        raise ValueError(f"shift count must be positive, got {query.shift_count}")
    if query.max_power < 1:
        raise ValueError(f"max power must be positive, got {query.max_power}")
    found: list[DiscoveredIdentity] = []
    for m in range(1, query.max_power + 1):
        for n in range(m + 2, query.max_power + 1, 2):
            p = (m + n) // 2
            derived = _derive(query.shift_count, m, n, p, query.mode)
            if derived is None:
                continue
            harmonic, square_factor, product_factor = derived
            found.append(
                DiscoveredIdentity(m, n, p, harmonic, square_factor, product_factor)
            )
    found.sort(key=lambda d: (d.p, d.m, d.n))
    return found


def emit_statement(
    identity: DiscoveredIdentity, shift_count: int, mode: Mode = Mode.DIFFERENCE
) -> Union[IdentityStatement, str]:
    """Concrete statement of one discovered relation.

    For shift count 3 the relation has an exact algebraic form: the
    bracket triples parameterize two angles of a common radius (the second
    one under a*d = b*c), so DIFFERENCE relations become D-bracket
    statements with the constraint on and POINTWISE relations become
    A-bracket statements with it off.  The classical (6, 10, 8) triple
    keeps its catalog name.  For any other shift count the relation is
    returned as plain text over f_k evaluations.
    """
    if shift_count == 3:
        if mode is Mode.DIFFERENCE:
            kind = BracketKind.D
            suffix = "six"
            constrained = True
        else:
            kind = BracketKind.A
            suffix = "three"
            constrained = False
        triple = (identity.m, identity.n, identity.p)
        if mode is Mode.DIFFERENCE and triple == (6, 10, 8):
            name = "ramanujan-6-10-8"
        else:
            name = f"gen-{identity.m}-{identity.n}-{identity.p}-{suffix}"
        lhs = Mul(
            Mul(Num(Fraction(identity.product_factor)), Bracket(kind, identity.m)),
            Bracket(kind, identity.n),
        )
        rhs = Mul(
            Num(Fraction(identity.square_factor)), Pow(Bracket(kind, identity.p), 2)
        )
        return IdentityStatement(name, lhs, rhs, constrained)
    if mode is Mode.DIFFERENCE:
        def delta(power: int) -> str:
            return f"(f_{power}(θ1) - f_{power}(θ2))"

        return (
            f"{identity.product_factor}*{delta(identity.m)}*{delta(identity.n)}"
            f" = {identity.square_factor}*{delta(identity.p)}^2"
        )
    return (
        f"{identity.product_factor}*f_{identity.m}(θ)*f_{identity.n}(θ)"
        f" = {identity.square_factor}*f_{identity.p}(θ)^2"
    )
