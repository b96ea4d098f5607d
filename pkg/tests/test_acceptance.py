"""Acceptance gate: ten criteria, one printed verdict line each.

Each test prints exactly one line of the form

    [criterion NN] PASS|FAIL - <label>

directly to the terminal (capture suspended) and then asserts, so the
verdicts are visible in any pytest run. Criterion 7 is expected to fail;
see its docstring and the README for the analysis.
"""

import math
import random
from fractions import Fraction

import pytest

from idrlab import (
    RationalInterval,
    binom,
    check_idr_bruteforce,
    check_idr_newton,
    closed_form_factorial_e,
    closed_form_hyper,
    enclose_exp_inv,
    enclose_hyper,
    euler_cf_convergents,
    eval_scaled_factorial_e,
    floor_via_interval,
    floored_scaled_factorial_witness,
    fractional_gap,
    halving_refiner,
    hyper_case,
    is_prime,
    lcm_table,
    oracle_rounded_factorial_e,
    polynomial_idr_check,
    power_factorial_witness,
    project_idr,
    values_from_coeffs,
    verify_convergent_gaps,
    verify_divisibility_lemmas,
    verify_factorial_e,
    verify_hyper,
)

from _oracles import binom_ref


def announce(capsys, number, ok, label):
    verdict = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(f"[criterion {number:02d}] {verdict} - {label}", flush=True)


def lcm_upto(n):
    return math.lcm(*range(1, n + 1)) if n else 1


def test_criterion_01_finite_check_agrees_with_coefficient_test(capsys):
    """500 random prefixes: pairwise divisibility verdict == lcm verdict."""
    rng = random.Random(20260819)
    problems = []
    for case in range(500):
        n = rng.randint(4, 32)
        coeffs = [lcm_upto(k) * rng.randint(-5, 5) for k in range(n + 1)]
        corrupt = case % 2 == 1
        if corrupt:
            k = rng.randint(2, n)
            coeffs[k] += rng.randint(1, lcm_upto(k) - 1)
        values = values_from_coeffs(coeffs, n)
        brute_ok = not check_idr_bruteforce(values).found
        newton_ok = check_idr_newton(values).holds
        if brute_ok != newton_ok:
            problems.append(f"case {case}: brute={brute_ok} newton={newton_ok}")
        if brute_ok == corrupt:
            problems.append(f"case {case}: expected verdict {not corrupt}, got {brute_ok}")
    ok = not problems
    announce(capsys, 1, ok, "pairwise divisibility matches the lcm coefficient test on 500 prefixes")
    assert ok, problems[:5]


def test_criterion_02_divisibility_lemma_sweep(capsys):
    report = verify_divisibility_lemmas(25)
    names = [entry.name for entry in report.lemmas]
    ok = (
        report.passed
        and names == ["binomial_window", "shift_difference", "pair_difference"]
        and all(entry.counterexample is None for entry in report.lemmas)
        and all(entry.checks > 0 for entry in report.lemmas)
    )
    announce(capsys, 2, ok, "three divisibility lemmas hold exhaustively up to n=25")
    assert ok, report


def test_criterion_03_factorial_e_closed_forms(capsys):
    problems = []
    for a in (-3, -2, -1, 1, 2, 3):
        for rounding in ("floor", "ceil"):
            report = verify_factorial_e(a, rounding, 25)
            if not report.consistent or report.undecided_count:
                problems.append(f"a={a} {rounding}: inconsistent or undecided")
            patched = [row.x for row in report.rows if row.status == "patched"]
            expected_patch = [0] if a == 1 else []
            if patched != expected_patch:
                problems.append(f"a={a} {rounding}: patch rows {patched}")
            table = [closed_form_factorial_e(a, rounding, x) for x in range(26)]
            if check_idr_bruteforce(table).found:
                problems.append(f"a={a} {rounding}: table fails difference-ratio check")
    # anchor values for the patched floor table at a=1
    if closed_form_factorial_e(1, "floor", 0) != 1:
        problems.append("floor table at a=1 must start at 1")
    if closed_form_factorial_e(1, "floor", 1) != 2:
        problems.append("floor table at a=1 must hit 2 at x=1")
    ok = not problems
    announce(capsys, 3, ok, "rounded exp(1/a)*a^x*x! tables match interval oracles, a in -3..3")
    assert ok, problems


def test_criterion_04_scaled_tables_and_floor_chains(capsys):
    width0 = Fraction(1, 10**60)
    base = enclose_exp_inv(1, width0)
    refresh = halving_refiner(lambda w: enclose_exp_inv(1, w), width0)

    def floor_scaled(mult):
        got = floor_via_interval(base, mult, 20, refine=refresh)
        assert isinstance(got, int)
        return got

    problems = []
    for s in (2, 3):
        for x in range(21):
            table_value = eval_scaled_factorial_e(s, 1, x)
            s_times_floor = s * oracle_rounded_factorial_e(1, "floor", x)
            floor_of_scaled = floor_scaled(s * math.factorial(x))
            expected_table = s if x == 0 else s_times_floor
            if table_value != expected_table:
                problems.append(f"s={s} x={x}: table {table_value} != {expected_table}")
            if x >= s:
                if not table_value == s_times_floor == floor_of_scaled:
                    problems.append(f"s={s} x={x}: expected triple equality")
            elif not floor_of_scaled > s_times_floor >= table_value:
                problems.append(f"s={s} x={x}: chain violated")
    pins = [
        (eval_scaled_factorial_e(2, 1, 0), 2),
        (eval_scaled_factorial_e(2, 1, 1), 4),
        (eval_scaled_factorial_e(3, 1, 2), 15),
        (floor_scaled(2), 5),
        (floor_scaled(3), 8),
        (floor_scaled(3 * 2), 16),
    ]
    problems += [f"pin {got} != {want}" for got, want in pins if got != want]
    ok = not problems
    announce(capsys, 4, ok, "scaled tables sit under the true floors exactly as pinned")
    assert ok, problems


def test_criterion_05_hyper_closed_forms(capsys):
    problems = []
    width0 = Fraction(1, 10**40)
    for r in (0, 1):
        table = []
        for x in range(21):
            s = (x - r) % 2
            producer = lambda w, s=s: enclose_hyper(2, s, 2, w)
            oracle = floor_via_interval(
                producer(width0),
                2**x * math.factorial(x),
                30,
                refine=halving_refiner(producer, width0),
            )
            closed = closed_form_hyper(2, 2, r, "floor", x)
            table.append(closed)
            if closed != oracle:
                problems.append(f"r={r} x={x}: closed {closed} != oracle {oracle}")
        if check_idr_bruteforce(table).found:
            problems.append(f"r={r}: floor table fails difference-ratio check")
    if closed_form_hyper(2, 2, 1, "floor", 0) != 0:
        problems.append("r=1 table must start at 0")

    # every case branch exercised, and the verifier stays clean on each
    labels = set()
    for a in (-2, -1, 1, 2):
        for k in (2, 3):
            for r in range(k):
                labels.add(hyper_case(a, k, r).label)
                for rounding in ("floor", "ceil"):
                    report = verify_hyper(a, k, r, rounding, 10)
                    if not report.consistent or report.undecided_count:
                        problems.append(f"a={a} k={k} r={r} {rounding}: verifier unhappy")
                    table = [closed_form_hyper(a, k, r, rounding, x) for x in range(13)]
                    if check_idr_bruteforce(table).found:
                        problems.append(f"a={a} k={k} r={r} {rounding}: not difference-integral")
    if len(labels) != 10:
        problems.append(f"only {len(labels)} case branches covered: {sorted(labels)}")
    ok = not problems
    announce(capsys, 5, ok, "periodic-residue tables match parity-split interval oracles")
    assert ok, problems


def test_criterion_06_projection_bounds_and_tail_ratio(capsys):
    problems = []
    lcms = lcm_table(20)
    f = [3**x for x in range(21)]
    g = project_idr(f)
    coeffs_ref = [lcms[k] * (2**k // lcms[k]) for k in range(21)]
    g_ref = [sum(c * binom_ref(x, k) for k, c in enumerate(coeffs_ref)) for x in range(21)]
    if g != g_ref:
        problems.append("projection disagrees with the coefficient-floor oracle")
    if g[:5] != [1, 3, 9, 25, 69]:
        problems.append(f"projection prefix {g[:5]}")
    for x in range(21):
        if not 0 <= f[x] - g[x] <= 2**x * lcms[x]:
            problems.append(f"gap bound fails at x={x}")
    if not check_idr_newton(g).holds:
        problems.append("projected table fails the coefficient test")
    if check_idr_bruteforce(g).found:
        problems.append("projected table fails the pairwise check")

    # ceil((2e + 1/2)^x): build the table from interval powers, project,
    # and compare the tails as an exact rational ratio
    width0 = Fraction(1, 10**50)

    def powered(width, x):
        e2 = enclose_exp_inv(1, width).scale(2)
        lo = e2.lo + Fraction(1, 2)
        hi = e2.hi + Fraction(1, 2)
        return RationalInterval(lo**x, hi**x)

    ceil_table = []
    for x in range(31):
        if x == 0:
            ceil_table.append(1)
            continue
        floor = floor_via_interval(
            powered(width0, x),
            1,
            30,
            refine=halving_refiner(lambda w, x=x: powered(w, x), width0),
        )
        assert isinstance(floor, int)
        ceil_table.append(floor + 1)
    projected = project_idr(ceil_table)
    ratio = Fraction(projected[30], ceil_table[30])
    if not abs(1 - ratio) < Fraction(1, 100):
        problems.append(f"tail ratio off by {float(1 - ratio)}")
    ok = not problems
    announce(capsys, 6, ok, "projection keeps tables close: gap bound and 1% tail ratio")
    assert ok, problems


def test_criterion_07_lcm_growth_bounds(capsys):
    """Expected failure, kept honest.

    The claim under test is a two-sided growth bound: 2^n <= lcm(1..n) for
    7 <= n <= 40, together with lcm(1..n) < 3^n for 0 <= n <= 40. The
    second range includes n = 0, where lcm over an empty range is 1 by
    convention and 3^0 = 1, so the strict inequality degenerates to
    equality. No implementation can make the claim true as stated; this
    test reports the boundary case instead of quietly shrinking the range.
    """
    lower_failures = [n for n in range(7, 41) if not 2**n <= lcm_upto(n)]
    upper_failures = [n for n in range(0, 41) if not lcm_upto(n) < 3**n]
    ok = not lower_failures and not upper_failures
    announce(capsys, 7, ok, "two-sided lcm growth bound (strict upper bound from n=0)")
    if ok:
        return
    assert lower_failures == []
    assert upper_failures == [0]
    assert lcm_upto(0) == 1 == 3**0
    assert all(lcm_upto(n) < 3**n for n in range(1, 41))
    pytest.fail(
        "the strict upper bound lcm(1..n) < 3^n fails at n = 0, where both "
        "sides equal 1 (empty product convention). It holds for every n in "
        "1..40, and the lower bound 2^n <= lcm(1..n) holds for every n in "
        "7..40. The claim as stated is unattainable at the degenerate "
        "endpoint; see README for discussion."
    )


def test_criterion_08_witnesses_and_polynomials(capsys):
    problems = []
    for a in [a for a in range(-10, 11) if a]:
        w = power_factorial_witness(a)
        f = lambda t: a**t * math.factorial(t)
        if w.x - w.y != w.divisor or not is_prime(w.divisor):
            problems.append(f"a={a}: malformed witness {w}")
        elif (f(w.x) - f(w.y)) % w.divisor == 0:
            problems.append(f"a={a}: witness does not witness")
    for p, q in ((1, 1), (1, 2), (2, 3), (3, 4)):
        w = floored_scaled_factorial_witness(p, q)
        fa = p * math.factorial(w.a) // q
        fb = p * math.factorial(w.b) // q
        if w.a - w.b != w.divisor:
            problems.append(f"p/q={p}/{q}: gap is not the divisor")
        elif (fa - fb) % w.divisor == 0:
            problems.append(f"p/q={p}/{q}: witness does not witness")
    verdict = polynomial_idr_check([Fraction(0), Fraction(1, 2)], 50)
    if verdict.integral_high_coeffs or verdict.violation != (2, 0):
        problems.append(f"x/2 verdict {verdict}")
    rng = random.Random(404)
    for _ in range(25):
        deg = rng.randint(0, 5)
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in range(deg + 1)]
        verdict = polynomial_idr_check(coeffs, 50)
        if not verdict.integral_high_coeffs or verdict.violation is not None:
            problems.append(f"integer polynomial {coeffs} flagged: {verdict}")
    ok = not problems
    announce(capsys, 8, ok, "power-factorial and floored-ratio witnesses certify, polynomials split")
    assert ok, problems


def test_criterion_09_convergent_gap_bounds(capsys):
    problems = []
    terms = euler_cf_convergents(1, 9).terms
    if list(terms) != [2, 1, 2, 1, 1, 4, 1, 1, 6]:
        problems.append(f"continued fraction of e starts {terms}")
    for a in (1, 2, 3):
        flags = verify_convergent_gaps(a, 16)
        if len(flags) != 16 or not all(flags):
            problems.append(f"a={a}: gap bounds {flags}")
    ok = not problems
    announce(capsys, 9, ok, "two-sided convergent gap bounds hold for e^(1/a), 16 terms")
    assert ok, problems


def test_criterion_10_perturbed_band_containment(capsys):
    rng = random.Random(1105)
    problems = []
    for case in range(50):
        deg = rng.randint(1, 6)
        coeffs = [0] + [lcm_upto(k) * rng.randint(-4, 4) for k in range(1, deg + 1)]
        m_bound = Fraction(rng.randint(1, 50), rng.randint(1, 10))
        modulus = int(2 * m_bound) + rng.randint(1, 5)
        f = lambda x: sum(c * binom(x, k) for k, c in enumerate(coeffs))
        samples = []
        for n in range(11):
            delta = m_bound * Fraction(rng.randint(-16, 16), 16)
            samples.append(f(n * modulus) + delta)
        report = fractional_gap(samples, modulus)
        bad = [
            part
            for part in report.fractional_parts
            if not (part <= m_bound or part >= modulus - m_bound)
        ]
        if bad:
            problems.append(f"case {case}: parts outside bands {bad}")
        if report.max_gap < modulus - 2 * m_bound:
            problems.append(f"case {case}: gap {report.max_gap} too small")
    ok = not problems
    announce(capsys, 10, ok, "perturbed multiples land in the two edge bands, 50 trials")
    assert ok, problems
