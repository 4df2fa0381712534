import io
import json
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delta_laplace import sequences as seq
from delta_laplace.cli import EXIT_INPUT, EXIT_OK, EXIT_SOLVER, EXIT_VERIFY, run
from delta_laplace.dsl import parse_equation, parse_sequence
from delta_laplace.equation import Coefficient, DifferenceEquation, ICKind, value_ic
from delta_laplace.errors import ParseError, SemanticError
from delta_laplace.formatting import REPORT_SCHEMA, equation_to_dsl, format_report
from delta_laplace.oracle import VerificationResult
from delta_laplace.solver import solve_ivp

REFERENCE_INPUTS = [
    "D f = n ; f(1) = 1",
    "D2 f = n ; f(1) = 1 ; Df(1) = 2",
    "n D f = 1 ; f(2) = 2",
    "D f = 1/n^2 ; f(2) = 2",
    "n D f = 1/n ; f(2) = 2",
]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    eq = parse_equation("D2 f = n ; f(1) = 1 ; Df(1) = 2")
    assert eq.order == 2 and eq.coefficient is Coefficient.ONE
    assert eq.rhs == seq.N
    assert [(ic.kind, ic.index, ic.value) for ic in eq.ics] == [
        (ICKind.VALUE, 1, 1),
        (ICKind.FIRST_DIFFERENCE, 1, 2),
    ]
    eq = parse_equation("n Δ f = 1/n ; f(2) = 2")
    assert eq.coefficient is Coefficient.N and eq.rhs == seq.Recip(1)
    assert parse_sequence("3*n^2 - 1/n + 1/2") == seq.linear_combine(
        [(3, seq.Mono(2)), (-1, seq.Recip(1)), (Fraction(1, 2), seq.ONE)]
    )
    assert parse_sequence("−2/n^2") == seq.linear_combine([(-2, seq.Recip(2))])


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_equation("D f = n +")
    assert info.value.offset == 9
    assert set(info.value.expected) == {"integer", "n"}
    assert "byte 9" in str(info.value)


def test_parse_error_offset_is_in_bytes():
    with pytest.raises(ParseError) as info:
        parse_equation("Δ f = n ?")
    assert info.value.offset == len("Δ f = n ".encode())


@pytest.mark.parametrize(
    "text",
    ["D3 f = n ; f(1) = 1", "D f = 1/n^3 ; f(1) = 1", "D f = n^99 ; f(1) = 1", "D f = n", "D f = 1/0 ; f(1) = 1"],
)
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse_equation(text)


@pytest.mark.parametrize("text", REFERENCE_INPUTS + ["D f = 3/2 * n^2 - 1/n ; f(4) = -1/3", "n D2 f = 1 ; f(1) = 1 ; Df(1) = 0"])
def test_print_parse_round_trip(text):
    try:
        eq = parse_equation(text)
    except SemanticError:
        return
    assert parse_equation(equation_to_dsl(eq)) == eq


def test_text_report():
    report = solve_ivp(parse_equation(REFERENCE_INPUTS[0]), check_to=50)
    text = format_report(report, "text")
    assert "f(n) = 1 + (n^2 - n)/2" in text
    assert "passed" in text


def test_latex_report():
    report = solve_ivp(parse_equation(REFERENCE_INPUTS[2]), check_to=50)
    assert format_report(report, "latex") == r"1+\sum_{k=1}^{n-1}\frac{1}{k}"


def test_zero_solution_json():
    report = solve_ivp(DifferenceEquation("1", 1, seq.ZERO, [value_ic(1, 0)]), check_to=10)
    data = json.loads(format_report(report, "json"))
    assert data["solution_terms"] == []
    jsonschema.validate(data, REPORT_SCHEMA)


@pytest.mark.parametrize("text", REFERENCE_INPUTS)
def test_json_output_matches_schema(text):
    code, out, _ = call("solve", text, "--format", "json", "--check-to", "100")
    assert code == EXIT_OK
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["verification"]["passed"] is True
    assert data["verification"]["checked_to"] == 100


def test_json_terms_for_harmonic_solution():
    code, out, _ = call("solve", "n D f = 1/n ; f(2) = 2", "--format", "json", "--check-to", "20")
    assert json.loads(out)["solution_terms"] == [
        {"kind": "const", "coeff": "1/1", "param": None},
        {"kind": "harmonic", "coeff": "1/1", "param": 2},
    ]


def test_exit_codes():
    assert call("solve", "D f = n ; f(1) = 1", "--check-to", "20")[0] == EXIT_OK
    code, _, err = call("solve", "D f = n")
    assert code == EXIT_INPUT and "f(1)" in err
    assert call("solve", "D f = n ; f(1")[0] == EXIT_INPUT
    assert call("solve", "D3 f = n ; f(1) = 1")[0] == EXIT_INPUT
    assert call("solve", "D f = n ; f(1) = 1", "--check-to", "0")[0] == EXIT_INPUT
    assert call("solve", "D f = n ; f(1) = 1", "--s-grid", "-1")[0] == EXIT_INPUT
    assert call("solve", "D f = n ; f(1) = 1", "--s-grid", "abc")[0] == EXIT_INPUT
    assert call("bogus")[0] == EXIT_INPUT
    assert call("solve", "n D f = 1/n^2 ; f(1) = 1")[0] == EXIT_SOLVER
    assert call("solve", "D2 f = 1 ; Df(3) = 1 ; Df(5) = 2")[0] == EXIT_SOLVER


def test_exit_code_on_verification_failure(monkeypatch):
    import delta_laplace.solver as solver

    def failing(report, N, s_grid):
        return VerificationResult(N, True, N, 0.0, False, first_mismatch=1)

    monkeypatch.setattr(solver, "verify", failing)
    code, out, err = call("solve", "D f = n ; f(1) = 1", "--check-to", "10")
    assert code == EXIT_VERIFY
    assert out == "" and "first mismatch at n = 1" in err


def test_help_exits_zero(capsys):
    assert run(["--help"]) == EXIT_OK


def test_table_and_transform_commands():
    code, out, _ = call("table")
    assert code == EXIT_OK and "1/n" in out and "L" in out
    code, out, _ = call("transform", "n")
    assert code == EXIT_OK and "x/(x - 1)^2" in out
    assert call("transform", "1/n^5")[0] == EXIT_INPUT


dsl_chars = st.sampled_from(list("Dnf=;()+-*/^ 0123456789Δ") + ["D2", "Df", "f(1)", "1/n", "n^2"])


@settings(max_examples=200, deadline=None)
@given(st.lists(dsl_chars, max_size=25).map("".join))
def test_fuzz_returns_a_single_exit_code(text):
    code, _, _ = call("solve", text, "--check-to", "30")
    assert code in {EXIT_OK, EXIT_INPUT, EXIT_SOLVER, EXIT_VERIFY}


@settings(max_examples=100, deadline=None)
@given(st.text(max_size=30))
def test_fuzz_arbitrary_text(text):
    code, _, _ = call("solve", text, "--check-to", "30")
    assert code in {EXIT_OK, EXIT_INPUT, EXIT_SOLVER, EXIT_VERIFY}


@pytest.mark.parametrize("text", REFERENCE_INPUTS)
def test_report_echo_reparses(text):
    eq = parse_equation(text)
    report = solve_ivp(eq, check_to=20)
    echo = format_report(report, "text").splitlines()[0].removeprefix("equation: ")
    assert parse_equation(echo) == eq
