import math
from dataclasses import replace
from fractions import Fraction

import pytest

from delta_laplace import sequences as seq
from delta_laplace.equation import DifferenceEquation, difference_ic, value_ic
from delta_laplace.errors import AnchorUnreachable
from delta_laplace.oracle import (
    growth_bound,
    step_recurrence,
    tail_bound,
    terms_needed,
    truncated_transform,
    verify,
)
from delta_laplace.solver import solve_ivp

F = Fraction


def test_step_first_order():
    eq = DifferenceEquation("1", 1, seq.N, [value_ic(1, 1)])
    assert step_recurrence(eq, 4) == [1, 2, 4, 7]


def test_step_second_order():
    eq = DifferenceEquation("1", 2, seq.N, [value_ic(1, 1), difference_ic(1, 2)])
    assert step_recurrence(eq, 4) == [1, 3, 6, 11]


def test_step_backwards_from_anchor():
    eq = DifferenceEquation("n", 1, seq.ONE, [value_ic(2, 2)])
    assert step_recurrence(eq, 4) == [1, 2, F(5, 2), F(17, 6)]


def test_step_anchor_out_of_range():
    eq = DifferenceEquation("1", 1, seq.N, [value_ic(10, 1)])
    with pytest.raises(AnchorUnreachable):
        step_recurrence(eq, 5)


def test_step_is_deterministic():
    eq = DifferenceEquation("n", 1, seq.Recip(1), [value_ic(3, 1)])
    assert step_recurrence(eq, 50) == step_recurrence(eq, 50)


@pytest.mark.parametrize(
    "f, s, N, exact, tol",
    [
        (seq.ONE, math.log(2), 40, 1.0, 1e-11),
        (seq.N, 1.0, 60, math.e / (math.e - 1) ** 2, 1e-10),
        (seq.Recip(1), 1.0, 80, 1 - math.log(math.e - 1), 1e-10),
    ],
)
def test_truncated_transform_examples(f, s, N, exact, tol):
    value, tail = truncated_transform(f, s, N)
    assert abs(value - exact) < tol
    assert abs(value - exact) <= tail + 1e-15


@pytest.mark.parametrize("f", [seq.ONE, seq.N, seq.Mono(3), seq.Harmonic(1), seq.Harmonic(2)])
@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_tail_bound_is_an_upper_bound(f, s):
    N = 30
    value, tail = truncated_transform(f, s, N)
    far, _ = truncated_transform(f, s, 2000)
    assert far - value <= tail * (1 + 1e-9) + 1e-15


def test_growth_bound_holds():
    f = seq.linear_combine([(3, seq.Mono(2)), (-2, seq.Harmonic(1)), (1, seq.convolve(seq.Recip(1), seq.Recip(1)))])
    M, d = growth_bound(f)
    for n, v in enumerate(seq.values(f, 300), start=1):
        assert abs(float(v)) <= M * n ** d


def test_tail_bound_degenerate_cases():
    assert tail_bound(0.0, 3, 1.0, 10) == 0.0
    assert tail_bound(1.0, 50, 0.01, 1) == math.inf
    assert terms_needed(seq.N, 1.0) < 60


def test_truncated_transform_rejects_nonpositive_s():
    with pytest.raises(ValueError):
        truncated_transform(seq.ONE, 0.0, 10)


def test_verify_passes_for_true_solution():
    report = solve_ivp(DifferenceEquation("1", 1, seq.N, [value_ic(1, 1)]), check_to=10)
    result = verify(report, N=1000)
    assert result.passed and result.ic_satisfied
    assert result.recurrence_checked_to == 1000


def test_verify_flags_corrupted_solution():
    report = solve_ivp(DifferenceEquation("1", 1, seq.N, [value_ic(1, 1)]), check_to=10)
    bad = replace(report, solution=report.solution + seq.ONE)
    result = verify(bad, N=100)
    assert not result.passed
    assert result.first_mismatch == 1
    assert not result.ic_satisfied
    assert "first mismatch at n = 1" in result.summary()


def test_verify_flags_wrong_image():
    report = solve_ivp(DifferenceEquation("1", 1, seq.N, [value_ic(1, 1)]), check_to=10)
    from delta_laplace.transform import transform

    bad = replace(report, image=transform(report.solution + seq.ONE))
    result = verify(bad, N=50)
    assert not result.numeric_ok and not result.passed


def test_verify_numeric_error_small():
    report = solve_ivp(DifferenceEquation("n", 1, seq.ONE, [value_ic(2, 2)]), check_to=10)
    assert verify(report, N=200).numeric_transform_max_error <= 1e-9
