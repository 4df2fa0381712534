from fractions import Fraction

import pytest

from delta_laplace import sequences as seq

# Plain-python versions of the table sequences, independent of SeqExpr.eval.
TABLE_FUNCS = {
    "1": (seq.ONE, lambda n: Fraction(1)),
    "n": (seq.N, lambda n: Fraction(n)),
    "n^2": (seq.Mono(2), lambda n: Fraction(n * n)),
    "1/n": (seq.Recip(1), lambda n: Fraction(1, n)),
    "1/n^2": (seq.Recip(2), lambda n: Fraction(1, n * n)),
}


def brute_conv(f, g, n):
    return sum((f(k) * g(n - k) for k in range(1, n)), Fraction(0))


@pytest.fixture
def table_funcs():
    return TABLE_FUNCS


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion, then assert it."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
