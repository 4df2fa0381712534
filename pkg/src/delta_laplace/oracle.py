"""Brute-force ground truth for symbolic results.

Two checks that share nothing with the transform machinery: stepping the
recurrence forward in exact arithmetic, and summing the defining series of
the transform numerically with a rigorous tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linsolve
from . import sequences as seq
from .equation import Coefficient, DifferenceEquation, ICKind
from .errors import AnchorUnreachable, ConstantUnsolvable, InconsistentIC
from .sdomain import eval_numeric

DEFAULT_S_GRID = (0.5, 1.0, 2.0)
DEFAULT_TAIL_TARGET = 1e-12


@dataclass(frozen=True)
class VerificationResult:
    recurrence_checked_to: int
    ic_satisfied: bool
    max_index_checked: int
    numeric_transform_max_error: float
    passed: bool
    first_mismatch: int | None = None
    numeric_ok: bool = True

    def summary(self) -> str:
        verdict = "passed" if self.passed else "FAILED"
        out = (
            f"{verdict} (recurrence checked to n = {self.recurrence_checked_to}, "
            f"initial conditions {'ok' if self.ic_satisfied else 'violated'}, "
            f"max numeric transform error {self.numeric_transform_max_error:.3g})"
        )
        if self.first_mismatch is not None:
            out += f"; first mismatch at n = {self.first_mismatch}"
        return out


def _increments(eq: DifferenceEquation, count: int) -> list[Fraction]:
    rhs = seq.values(eq.rhs, count)
    if eq.coefficient is Coefficient.N:
        return [r / n for n, r in enumerate(rhs, start=1)]
    return rhs


def _trajectory(eq: DifferenceEquation, start: Sequence[Fraction], inc: Sequence[Fraction], count: int):
    f = list(start)
    while len(f) < count:
        n = len(f) - eq.order + 1  # equation index producing the next value
        if eq.order == 1:
            f.append(f[-1] + inc[n - 1])
        else:
            f.append(2 * f[-1] - f[-2] + inc[n - 1])
    return f[:count]


def step_recurrence(eq: DifferenceEquation, N: int) -> list[Fraction]:
    """[f(1), ..., f(N)] by stepping the recurrence in exact arithmetic.

    The orbit is affine in the unknown starting values f(1) (and f(2)), so the
    stepper runs from the unit starting vectors and solves for the start that
    meets the initial conditions; for an anchor above 1 this is back-stepping.
    """
    for ic in eq.ics:
        if ic.index > N:
            raise AnchorUnreachable(f"initial condition {ic} lies beyond n = {N}")
    count = max(N, eq.max_ic_index)
    inc = _increments(eq, count)
    k = eq.order
    base = _trajectory(eq, [Fraction(0)] * k, inc, count)
    units = []
    for i in range(k):
        start = [Fraction(0)] * k
        start[i] = Fraction(1)
        zero_rhs = [Fraction(0)] * count
        units.append(_trajectory(eq, start, zero_rhs, count))

    def at(traj, ic):
        if ic.kind is ICKind.VALUE:
            return traj[ic.index - 1]
        return traj[ic.index] - traj[ic.index - 1]

    rows = [[at(u, ic) for u in units] for ic in eq.ics]
    rhs = [ic.value - at(base, ic) for ic in eq.ics]
    try:
        start = linsolve.solve(rows, rhs)
    except linsolve.SingularSystem as exc:
        if exc.consistent:
            raise ConstantUnsolvable("the initial conditions do not determine the solution") from None
        raise InconsistentIC("the initial conditions contradict the equation") from None
    out = list(base)
    for c, u in zip(start, units):
        out = [a + c * b for a, b in zip(out, u)]
    return out[:N]


def growth_bound(f: seq.SeqExpr) -> tuple[float, int]:
    """(M, d) with |f(n)| <= M n^d for every n >= 1."""
    M, d = 0.0, 0
    for c, atom in seq.terms_of(f):
        c = abs(float(c))
        if atom == seq.ONE:
            m, k = c, 0
        elif isinstance(atom, seq.Mono):
            m, k = c, atom.k
        elif isinstance(atom, seq.Recip):
            m, k = c, 0
        elif isinstance(atom, seq.Harmonic):
            # H_{n-1} <= n; sum 1/k^2 < 2
            m, k = (c, 1) if atom.m == 1 else (2 * c, 0)
        elif isinstance(atom, seq.Conv):
            ml, dl = growth_bound(atom.left)
            mr, dr = growth_bound(atom.right)
            m, k = c * ml * mr, dl + dr + 1
        else:
            raise TypeError(f"unexpected atom {atom!r}")
        M += m
        d = max(d, k)
    return M, d


def tail_bound(M: float, d: int, s: float, N: int) -> float:
    """Bound on sum_{n>N} M n^d e^{-sn} (ratio test on consecutive terms)."""
    if M == 0:
        return 0.0
    r = math.exp(-s)
    q = r * ((N + 2) / (N + 1)) ** d
    if q >= 1:
        return math.inf
    return M * (N + 1) ** d * r ** (N + 1) / (1 - q)


def terms_needed(f: seq.SeqExpr, s: float, target: float = DEFAULT_TAIL_TARGET, limit: int = 100_000) -> int:
    M, d = growth_bound(f)
    N = 1
    while tail_bound(M, d, s, N) >= target:
        N += 1
        if N > limit:
            raise ValueError(f"series converges too slowly at s = {s}")
    return N


def truncated_transform(f: seq.SeqExpr, s: float, N: int) -> tuple[float, float]:
    """(sum_{n=1}^N e^{-sn} f(n), bound on the neglected tail)."""
    if not s > 0:
        raise ValueError("the transform is only defined for s > 0")
    vals = seq.values(f, N)
    total = math.fsum(float(v) * math.exp(-s * n) for n, v in enumerate(vals, start=1))
    M, d = growth_bound(f)
    return total, tail_bound(M, d, s, N)


def numeric_transform_error(f: seq.SeqExpr, image, s: float) -> tuple[float, float]:
    """(|truncated series - image(s)|, tail bound) with the tail below 1e-12."""
    N = terms_needed(f, s)
    value, tail = truncated_transform(f, s, N)
    return abs(value - eval_numeric(image, s)), tail


def verify(report, N: int = 1000, s_grid: Sequence[float] = DEFAULT_S_GRID) -> VerificationResult:
    """Check a solve report against the stepped recurrence and the numeric series."""
    eq = report.equation
    solution = report.solution
    k = eq.order

    expected = step_recurrence(eq, N)
    got = seq.values(solution, N + k)
    first_mismatch = next((n for n in range(1, N + 1) if got[n - 1] != expected[n - 1]), None)

    # the closed form must also satisfy the equation directly
    diffs = seq.shift_values(got, k)
    rhs = seq.values(eq.rhs, N)
    for n in range(1, N + 1):
        lhs = diffs[n - 1] * (n if eq.coefficient is Coefficient.N else 1)
        if lhs != rhs[n - 1]:
            first_mismatch = n if first_mismatch is None else min(first_mismatch, n)
            break

    ic_ok = True
    for ic in eq.ics:
        v = got[ic.index - 1] if ic.kind is ICKind.VALUE else got[ic.index] - got[ic.index - 1]
        ic_ok = ic_ok and v == ic.value

    max_err, numeric_ok = 0.0, True
    for s in s_grid:
        err, tail = numeric_transform_error(solution, report.image, s)
        max_err = max(max_err, err)
        numeric_ok = numeric_ok and err <= 10 * tail

    passed = first_mismatch is None and ic_ok and numeric_ok
    return VerificationResult(
        recurrence_checked_to=N,
        ic_satisfied=ic_ok,
        max_index_checked=N,
        numeric_transform_max_error=max_err,
        passed=passed,
        first_mismatch=first_mismatch,
        numeric_ok=numeric_ok,
    )
