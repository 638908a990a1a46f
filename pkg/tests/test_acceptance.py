"""Acceptance suite: one test per shipped guarantee, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines; each test also fails loudly through pytest if its criterion fails.
"""

import math
import random
import time
from fractions import Fraction

from test_discovery import brute_force_triples, direct_power_sum
from test_dsl import random_statement

from trigident.algebra import Polynomial
from trigident.cli import run
from trigident.discovery import DiscoveredIdentity, DiscoveryQuery, derive_constant, discover
from trigident.dsl import Format, parse, render
from trigident.fourier import Mode, linearize_closed, linearize_oracle
from trigident.identities import (
    BracketKind,
    Verdict,
    bracket_poly,
    catalog,
    spot_check,
    verify,
)
from trigident.polar import PolarForm, ZeroSumTriple, compose, decompose, pair_product_sum

A = Polynomial.variable("a")
B = Polynomial.variable("b")
C = Polynomial.variable("c")
D = Polynomial.variable("d")


def _finish(criterion, failures):
    print(("PASS " if not failures else "FAIL ") + criterion)
    assert not failures, f"{criterion}: {failures}"


def test_criterion_01_even_expansions_at_shift_count_three():
    failures = []
    expected = {
        6: {0: Fraction(15, 16), 6: Fraction(3, 32)},
        8: {0: Fraction(105, 128), 6: Fraction(3, 16)},
        10: {0: Fraction(189, 256), 6: Fraction(135, 512)},
    }
    start = time.perf_counter()
    results = {n: dict(linearize_closed(3, n).coefficients) for n in expected}
    elapsed = time.perf_counter() - start
    for n, coefficients in expected.items():
        if results[n] != coefficients:
            failures.append(f"n={n}: {results[n]} != {coefficients}")
    if elapsed >= 0.010:
        failures.append(f"runtime {elapsed * 1000:.2f} ms exceeds 10 ms")
    _finish("criterion 1: exact even expansions (6, 8, 10) at shift count 3", failures)


def test_criterion_02_odd_expansions_and_the_half_denominator_trap():
    failures = []
    expected = {
        3: {3: Fraction(3, 4)},
        5: {3: Fraction(15, 16)},
        7: {3: Fraction(63, 64)},
    }
    for n, coefficients in expected.items():
        got = dict(linearize_closed(3, n).coefficients)
        if got != coefficients:
            failures.append(f"n={n}: {got} != {coefficients}")

    # A tempting mis-normalization divides odd coefficients by 2^(2p+1)
    # instead of 2^(2p).  It must fail every odd case by exactly a factor
    # of two, which pins down the correct denominator.
    def half_denominator_variant(shift_count, power):
        p = (power - 1) // 2
        return {
            2 * m + 1: shift_count
            * Fraction(math.comb(2 * p + 1, p - m), 2 ** (2 * p + 1))
            for m in range(p + 1)
            if (2 * m + 1) % shift_count == 0
        }

    for n, coefficients in expected.items():
        variant = half_denominator_variant(3, n)
        if variant == coefficients:
            failures.append(f"n={n}: half-denominator variant unexpectedly matches")
        if {h: 2 * c for h, c in variant.items()} != coefficients:
            failures.append(f"n={n}: variant is not off by exactly a factor of 2")
    _finish("criterion 2: exact odd expansions (3, 5, 7) and factor-2 denominator pin", failures)


def test_criterion_03_closed_form_equals_binomial_oracle_everywhere():
    failures = []
    start = time.perf_counter()
    for shift_count in range(1, 9):
        for power in range(0, 17):
            closed = dict(linearize_closed(shift_count, power).coefficients)
            oracle = dict(linearize_oracle(shift_count, power).coefficients)
            if closed != oracle:
                failures.append(f"(N={shift_count}, n={power}): {closed} != {oracle}")
    elapsed = time.perf_counter() - start
    if elapsed >= 5.0:
        failures.append(f"runtime {elapsed:.2f} s exceeds 5 s")
    _finish("criterion 3: closed form equals binomial oracle for N 1..8, n 0..16", failures)


def test_criterion_04_classical_product_identity_is_proved():
    failures = []
    start = time.perf_counter()
    report = verify(next(s for s in catalog() if s.name == "ramanujan-6-10-8"))
    elapsed = time.perf_counter() - start
    if report.verdict is not Verdict.PROVED:
        failures.append(f"verdict {report.verdict}")
    if report.reduced_terms != 0:
        failures.append(f"reduced_terms {report.reduced_terms}")
    if elapsed >= 5.0:
        failures.append(f"runtime {elapsed:.2f} s exceeds 5 s")
    _finish("criterion 4: 64*D(6)*D(10) == 45*D(8)^2 proved with zero reduced terms", failures)


def test_criterion_05_companion_identities_are_proved():
    failures = []
    for statement in catalog():
        if statement.name == "ramanujan-6-10-8":
            continue
        start = time.perf_counter()
        report = verify(statement)
        elapsed = time.perf_counter() - start
        if report.verdict is not Verdict.PROVED:
            failures.append(f"{statement.name}: {report.verdict}")
        if elapsed >= 5.0:
            failures.append(f"{statement.name}: runtime {elapsed:.2f} s exceeds 5 s")
    _finish("criterion 5: the four companion catalog identities are proved", failures)


def test_criterion_06_bracket_facts_confirmed_by_expansion():
    failures = []
    if bracket_poly(BracketKind.D, 0) != Polynomial.zero():
        failures.append("D(0) != 0")
    if bracket_poly(BracketKind.D, 1) != Polynomial.zero():
        failures.append("D(1) != 0")
    if bracket_poly(BracketKind.D, 2) != -6 * (A * D - B * C):
        failures.append("D(2) != -6*(a*d - b*c)")
    quadratic_ab = A ** 2 + A * B + B ** 2
    quadratic_ac = A ** 2 + A * C + C ** 2
    relation = A ** 2 * bracket_poly(BracketKind.A, 2) - 2 * quadratic_ab * quadratic_ac
    if relation.substitute_clear("d", B * C, A) != Polynomial.zero():
        failures.append("a^2*A(2) - 2*(a^2+a*b+b^2)*(a^2+a*c+c^2) does not vanish")
    _finish("criterion 6: bracket facts D(0), D(1), D(2), quadratic-prefactor relation", failures)


def test_criterion_07_constant_derivation_from_amplitudes():
    failures = []
    amplitude_6 = linearize_closed(3, 6).coefficients[6]
    amplitude_8 = linearize_closed(3, 8).coefficients[6]
    amplitude_10 = linearize_closed(3, 10).coefficients[6]
    if amplitude_6 * amplitude_10 != Fraction(405, 16384):
        failures.append(f"product amplitude {amplitude_6 * amplitude_10}")
    if amplitude_8 ** 2 != Fraction(9, 256):
        failures.append(f"square amplitude {amplitude_8 ** 2}")
    if (amplitude_6 * amplitude_10) / amplitude_8 ** 2 != Fraction(45, 64):
        failures.append("amplitude ratio is not 45/64")
    if derive_constant(3, 6, 10, 8, Mode.DIFFERENCE) != (45, 64):
        failures.append("derive_constant(3,6,10,8,DIFFERENCE) != (45,64)")
    if derive_constant(3, 3, 7, 5, Mode.POINTWISE) != (21, 25):
        failures.append("derive_constant(3,3,7,5,POINTWISE) != (21,25)")
    _finish("criterion 7: constants derived from amplitude ratios (45/64 and 21/25)", failures)


def test_criterion_08_search_completeness_at_shift_counts_three_and_four():
    failures = []
    start = time.perf_counter()
    results = discover(DiscoveryQuery(3, 11, Mode.DIFFERENCE))
    brute = brute_force_triples(3, 11, Mode.DIFFERENCE)
    elapsed = time.perf_counter() - start
    if results != [
        DiscoveredIdentity(3, 7, 5, 3, 21, 25),
        DiscoveredIdentity(6, 10, 8, 6, 45, 64),
    ]:
        failures.append(f"shift count 3 results: {results}")
    if {(d.m, d.n, d.p) for d in results} != set(brute):
        failures.append(f"shift count 3 grid check: {sorted(brute)}")
    if elapsed >= 1.0:
        failures.append(f"shift count 3 runtime {elapsed:.2f} s exceeds 1 s")

    start = time.perf_counter()
    results = discover(DiscoveryQuery(4, 9, Mode.DIFFERENCE))
    brute = brute_force_triples(4, 9, Mode.DIFFERENCE)
    elapsed = time.perf_counter() - start
    if results != []:
        failures.append(f"shift count 4 results: {results}")
    if brute:
        failures.append(f"shift count 4 grid check: {sorted(brute)}")
    if elapsed >= 1.0:
        failures.append(f"shift count 4 runtime {elapsed:.2f} s exceeds 1 s")
    _finish("criterion 8: search matches the exhaustive grid at shift counts 3 and 4", failures)


def test_criterion_09_new_relations_at_shift_count_five():
    failures = []
    results = discover(DiscoveryQuery(5, 13, Mode.DIFFERENCE))
    triples = [(d.m, d.n, d.p) for d in results]
    if triples != [(5, 9, 7), (5, 13, 9), (7, 11, 9), (9, 13, 11)]:
        failures.append(f"triples: {triples}")
    rng = random.Random(20260819)
    for d in results:
        for _ in range(100):
            theta1 = rng.uniform(-math.pi, math.pi)
            theta2 = rng.uniform(-math.pi, math.pi)
            rho = rng.uniform(0.5, 2.0)

            def delta(power):
                return rho ** power * (
                    direct_power_sum(5, power, theta1)
                    - direct_power_sum(5, power, theta2)
                )

            lhs = d.product_factor * delta(d.m) * delta(d.n)
            rhs = d.square_factor * delta(d.p) ** 2
            if abs(lhs - rhs) > 1e-9 * max(1.0, abs(lhs), abs(rhs)):
                failures.append(f"{(d.m, d.n, d.p)}: |{lhs} - {rhs}|")
                break
    _finish("criterion 9: shift-count-5 relations hold at 100 random angles each", failures)


def test_criterion_10_polar_round_trip_and_radius_from_pair_products():
    failures = []
    rng = random.Random(31415)
    start = time.perf_counter()
    for _ in range(1000):
        x = rng.uniform(-10.0, 10.0)
        y = rng.uniform(-10.0, 10.0)
        triple = ZeroSumTriple(x, y, -(x + y))
        back = compose(decompose(triple))
        scale = 1.0 + max(abs(triple.x), abs(triple.y), abs(triple.z))
        error = max(
            abs(back.x - triple.x), abs(back.y - triple.y), abs(back.z - triple.z)
        )
        if error > 1e-12 * scale:
            failures.append(f"round trip error {error} at {triple}")
            break
    for _ in range(200):
        x = rng.uniform(-10.0, 10.0)
        y = rng.uniform(-10.0, 10.0)
        first = ZeroSumTriple(x, y, -(x + y))
        rho = decompose(first).rho
        second = compose(PolarForm(rho, rng.uniform(-math.pi + 1e-9, math.pi)))
        products_differ = abs(pair_product_sum(first) - pair_product_sum(second))
        if products_differ > 1e-9 * (1.0 + rho * rho):
            failures.append(f"pair products differ by {products_differ}")
            break
        radius_gap = abs(decompose(second).rho - rho)
        if radius_gap > 1e-9 * (1.0 + rho):
            failures.append(f"equal pair products but radii differ by {radius_gap}")
            break
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f} s exceeds 1 s")
    _finish("criterion 10: polar round trip at 1e-12 and radius determined by pair products", failures)


def test_criterion_11_spot_checks_and_corrupted_constant():
    failures = []
    for statement in catalog():
        report = spot_check(statement, trials=100, seed=0)
        if report.verdict is not Verdict.PROVED:
            failures.append(f"{statement.name}: {report.verdict}")
    corrupted = parse(
        "constraint: a*d - b*c = 0; 64*D(6)*D(10) == 44*D(8)^2",
        name="ramanujan-corrupted",
    )
    report = spot_check(corrupted, trials=100, seed=0)
    if report.verdict is not Verdict.FALSIFIED:
        failures.append("corrupted constant not caught")
    if report.witness is None:
        failures.append("corrupted constant caught without a witness")
    _finish("criterion 11: 100-point spot checks pass; corrupted constant is falsified", failures)


def test_criterion_12_round_trips_and_exit_codes(tmp_path, capsys):
    failures = []
    for statement in catalog():
        if parse(render(statement, Format.PLAIN)) != statement:
            failures.append(f"{statement.name} does not round-trip")
    rng = random.Random(27182818)
    for index in range(100):
        statement = random_statement(rng)
        if parse(render(statement, Format.PLAIN)) != statement:
            failures.append(f"generated statement {index} does not round-trip")
            break

    falsified = tmp_path / "corrupted.rid"
    falsified.write_text(
        "constraint: a*d - b*c = 0; 64*D(6)*D(10) == 44*D(8)^2\n", encoding="utf-8"
    )
    broken = tmp_path / "broken.rid"
    broken.write_text("64*D(6)* == 1\n", encoding="utf-8")
    invocations = [
        (["verify", "gen-3-7-5-three"], 0),
        (["linearize", "-N", "3", "-n", "6"], 0),
        (["catalog"], 0),
        (["discover", "-N", "4", "--max-n", "9"], 0),
        (["verify", str(falsified)], 1),
        (["verify", str(falsified), "--numeric"], 1),
        (["verify", "missing-name"], 2),
        (["verify", str(broken)], 2),
        (["linearize", "-N", "3"], 2),
        (["polar", "decompose", "1", "1", "1"], 2),
    ]
    for argv, expected in invocations:
        code = run(argv)
        if code != expected:
            failures.append(f"{argv}: exit {code}, expected {expected}")
    capsys.readouterr()
    _finish("criterion 12: plain-text round trips and the 0/1/2 exit-code contract", failures)
