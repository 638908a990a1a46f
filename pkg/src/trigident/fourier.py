"""Exact Fourier expansions of shifted-cosine power sums.

The object of study is

    f_n(theta) = sum_{k=0}^{N-1} cos^n(theta + 2*k*pi/N),

a trigonometric polynomial in which only harmonics divisible by N survive:
averaging cos(h*theta + 2*k*h*pi/N) over the N shifts kills every h that is
not a multiple of N and leaves the rest untouched.  Two independent routes
compute the surviving coefficients exactly over the rationals:

* ``linearize_closed`` evaluates a closed form in central binomial
  coefficients, one formula per parity of n.
* ``linearize_oracle`` expands cos^n theta = 2^-n * sum_k C(n, k) *
  cos((n - 2k) theta) directly and keeps the harmonics divisible by N.

Both return the coefficients of the full sum over N shifts, not of the
average, so f_0 is the constant N.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Optional


class Mode(Enum):
    """How the constant term is treated when classifying an expansion.

    DIFFERENCE ignores the constant term, because it cancels in
    f_n(theta1) - f_n(theta2).  POINTWISE requires the constant term to be
    absent, because nothing cancels it in f_n(theta) itself.
    """

    DIFFERENCE = "difference"
    POINTWISE = "pointwise"


@dataclass(frozen=True)
class FourierExpansion:
    """Expansion of one power sum: harmonic -> exact coefficient.

    Every stored harmonic h satisfies h % shift_count == 0, h <= power, and
    h has the same parity as power; zero coefficients are never stored.
    """

    shift_count: int
    power: int
    coefficients: Mapping[int, Fraction] = field(default_factory=dict)

    def sorted_items(self) -> list[tuple[int, Fraction]]:
        return sorted(self.coefficients.items())


def linearize_closed(shift_count: int, power: int) -> FourierExpansion:
    """Closed-form coefficients of f_power for shift_count shifts.

    For even power n = 2p the coefficient of cos(2m * theta), m >= 1, is
    N * C(2p, p+m) / 2^(2p-1), and the constant term is N * C(2p, p) / 2^(2p).
    For odd power n = 2p+1 the coefficient of cos((2m+1) * theta) is
    N * C(2p+1, p-m) / 2^(2p).  Only harmonics divisible by N are kept.
    """
    _check_arguments(shift_count, power)
    coefficients: dict[int, Fraction] = {}
    if power % 2 == 0:
        p = power // 2
        for m in range(p + 1):
            harmonic = 2 * m
            if harmonic % shift_count:
                continue
            if m == 0:
                value = Fraction(math.comb(2 * p, p), 2 ** (2 * p))
            else:
                value = Fraction(math.comb(2 * p, p + m), 2 ** (2 * p - 1))
            coefficients[harmonic] = shift_count * value
    else:
        p = (power - 1) // 2
        for m in range(p + 1):
            harmonic = 2 * m + 1
            if harmonic % shift_count:
                continue
            value = Fraction(math.comb(2 * p + 1, p - m), 2 ** (2 * p))
            coefficients[harmonic] = shift_count * value
    return FourierExpansion(shift_count, power, coefficients)


def linearize_oracle(shift_count: int, power: int) -> FourierExpansion:
    """Same expansion via the binomial theorem, with no closed form involved.

    Writing cos theta = (e^(i theta) + e^(-i theta)) / 2 and expanding the
    n-th power gives cos^n theta = 2^-n * sum_{k=0}^{n} C(n, k) *
    cos((n - 2k) theta).  Summing the shifts keeps the harmonics divisible
    by shift_count and multiplies each by shift_count.
    """
    _check_arguments(shift_count, power)
    scale = Fraction(1, 2 ** power)
    folded: dict[int, Fraction] = {}
    for k in range(power + 1):
        harmonic = abs(power - 2 * k)
        if harmonic % shift_count:
            continue
        folded[harmonic] = folded.get(harmonic, Fraction(0)) + math.comb(power, k) * scale
    coefficients = {h: shift_count * c for h, c in folded.items() if c}
    return FourierExpansion(shift_count, power, coefficients)


def eval_expansion(expansion: FourierExpansion, theta: float) -> float:
    """Float value of the expansion at one angle."""
    return sum(float(c) * math.cos(h * theta) for h, c in expansion.coefficients.items())


def single_harmonic(expansion: FourierExpansion, mode: Mode) -> Optional[tuple[int, Fraction]]:
    """The unique positive harmonic and its amplitude, if there is exactly one.

    Returns None when the expansion has zero or several positive harmonics,
    or when mode is POINTWISE and a constant term is present.
    """
    positive = [(h, c) for h, c in expansion.coefficients.items() if h > 0]
    if len(positive) != 1:
        return None
    if mode is Mode.POINTWISE and 0 in expansion.coefficients:
        return None
    return positive[0]


def to_json(expansion: FourierExpansion) -> str:
    """Canonical JSON with terms sorted by harmonic and exact string coefficients."""
    payload = {
        "N": expansion.shift_count,
        "n": expansion.power,
        "terms": [
            {"harmonic": h, "coeff": str(c)} for h, c in expansion.sorted_items()
        ],
    }
    return json.dumps(payload, separators=(",", ":"))


def render_plain(expansion: FourierExpansion) -> str:
    """One-line human form, e.g. ``f_6 = 15/16 + 3/32 cos(6θ)``."""
    pieces = [
        str(c) if h == 0 else f"{c} cos({h}θ)"
        for h, c in expansion.sorted_items()
    ]
    body = " + ".join(pieces) if pieces else "0"
    return f"f_{expansion.power} = {body}"


def render_latex(expansion: FourierExpansion) -> str:
    """LaTeX form of the expansion, mirroring ``render_plain``."""
    pieces = [
        _latex_rational(c) if h == 0 else f"{_latex_rational(c)}\\cos({h}\\theta)"
        for h, c in expansion.sorted_items()
    ]
    body = " + ".join(pieces) if pieces else "0"
    return f"f_{{{expansion.power}}}(\\theta) = {body}"


def _latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"


def _check_arguments(shift_count: int, power: int) -> None:
    if shift_count < 1:
        raise ValueError(f"shift count must be positive, got {shift_count}")
    if power < 0:
        raise ValueError(f"power must be non-negative, got {power}")
