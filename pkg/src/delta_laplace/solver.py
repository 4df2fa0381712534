"""End-to-end IVP pipeline: transform, solve for the image, fix constants, invert, verify."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linsolve
from . import sequences as seq
from .equation import Coefficient, DifferenceEquation, ICKind, InitialCondition
from .errors import ConstantUnsolvable, InconsistentIC, VerificationError
from .oracle import DEFAULT_S_GRID, VerificationResult, verify
from .polys import Poly, RatFunc
from .sdomain import SExpr, SExprWithConstant, antiderivative_s, mul_rat
from .sequences import SeqExpr
from .transform import LinearForm, boundary_coefficients, inverse_transform, transform, transform_difference

ROUTE_ALGEBRAIC = "algebraic"
ROUTE_ODE = "s-domain ODE"
ROUTE_TIMES_N = "multiply by n, then s-domain ODE"

_X_MINUS_ONE = RatFunc(Poly([-1, 1]))


@dataclass(frozen=True)
class SolveReport:
    equation: DifferenceEquation
    image: SExpr
    solution: SeqExpr
    verification: VerificationResult
    route: str = ROUTE_ALGEBRAIC
    constants: tuple = ()


def algebraic_solve(form: LinearForm, rhs_image: SExpr) -> SExpr:
    """F = (rhs_image - B) / A."""
    return mul_rat(rhs_image - form.B, form.A.inverse())


def sdomain_ode_solve(r: SExpr) -> SExprWithConstant:
    """General solution of F' + x/(x - 1) F = r.

    The integrating factor x - 1 turns the left side into ((x - 1) F)', so
    F = (int (x - 1) r ds + C) / (x - 1).
    """
    inv = _X_MINUS_ONE.inverse()
    G = antiderivative_s(mul_rat(r, _X_MINUS_ONE))
    return SExprWithConstant(mul_rat(G, inv), (SExpr.rational(inv),))


def _ic_row(values_: list[Fraction], ic: InitialCondition) -> Fraction:
    if ic.kind is ICKind.VALUE:
        return values_[ic.index - 1]
    return values_[ic.index] - values_[ic.index - 1]


def solve_constants(F: SExprWithConstant, ics: Sequence[InitialCondition]) -> list[Fraction]:
    """Free constants making the inverse transform of F meet ``ics``."""
    count = max(ic.index + 1 for ic in ics)
    particular = seq.values(inverse_transform(F.particular), count)
    dirs = [seq.values(inverse_transform(d), count) for d in F.directions]
    rows = [[_ic_row(d, ic) for d in dirs] for ic in ics]
    rhs = [ic.value - _ic_row(particular, ic) for ic in ics]
    try:
        return linsolve.solve(rows, rhs)
    except linsolve.SingularSystem as exc:
        if exc.consistent:
            raise ConstantUnsolvable("the initial conditions leave a free constant undetermined") from None
        raise InconsistentIC("the initial conditions contradict the equation extended to n >= 1") from None


def determine_constant(F: SExprWithConstant, ics) -> SExpr:
    """Substitute the constants fixed by ``ics`` (one condition or a list)."""
    if isinstance(ics, InitialCondition):
        ics = [ics]
    elif isinstance(ics, tuple) and len(ics) == 2 and isinstance(ics[0], int):
        ics = [InitialCondition(ICKind.VALUE, ics[0], Fraction(ics[1]))]
    return F.substitute(solve_constants(F, list(ics)))


def _has_reciprocal(f: SeqExpr) -> bool:
    return any(isinstance(atom, seq.Recip) for _, atom in seq.terms_of(f))


def _anchored_at_one(eq: DifferenceEquation):
    """(f(1), Delta f(1)) when the ICs sit at n = 1, else None."""
    by_kind = {(ic.kind, ic.index): ic.value for ic in eq.ics}
    f1 = by_kind.get((ICKind.VALUE, 1))
    if f1 is None:
        return None
    if eq.order == 1:
        return f1, None
    df1 = by_kind.get((ICKind.FIRST_DIFFERENCE, 1))
    return None if df1 is None else (f1, df1)


def _solve_image(eq: DifferenceEquation) -> tuple[SExpr, str, tuple]:
    rhs = eq.rhs
    coefficient = eq.coefficient
    route = ROUTE_ODE
    if coefficient is Coefficient.ONE and eq.order == 1 and _has_reciprocal(rhs):
        # Delta f = g  <=>  n Delta f = n g keeps 1/n^2 inside the ODE route
        rhs = seq.times_n(rhs)
        coefficient = Coefficient.N
        route = ROUTE_TIMES_N

    R = transform(rhs)
    if coefficient is Coefficient.N:
        # l{n Delta f} = (x - 1) l{n f} - x F = -(x - 1) F' - x F
        general = sdomain_ode_solve(mul_rat(-R, _X_MINUS_ONE.inverse()))
        constants = solve_constants(general, eq.ics)
        return general.substitute(constants), route, tuple(constants)

    anchored = _anchored_at_one(eq)
    if anchored is not None:
        form = transform_difference(eq.order, *anchored)
        return algebraic_solve(form, R), ROUTE_ALGEBRAIC, ()
    # unknown f(1) (and f(2)) become free constants
    A_inv = (_X_MINUS_ONE ** eq.order).inverse()
    general = SExprWithConstant(
        mul_rat(R, A_inv),
        tuple(SExpr.rational(-b * A_inv) for b in boundary_coefficients(eq.order)),
    )
    constants = solve_constants(general, eq.ics)
    return general.substitute(constants), ROUTE_ALGEBRAIC, tuple(constants)


def solve_ivp(
    eq: DifferenceEquation,
    check_to: int = 1000,
    s_grid: Sequence[float] = DEFAULT_S_GRID,
) -> SolveReport:
    """Solve ``eq`` by the discrete Laplace transform and verify the result.

    Raises :class:`VerificationError` if the closed form disagrees with the
    brute-force oracle; a report is never returned unverified.
    """
    image, route, constants = _solve_image(eq)
    solution = inverse_transform(image)
    report = SolveReport(eq, image, solution, None, route, constants)
    result = verify(report, N=max(check_to, eq.max_ic_index), s_grid=s_grid)
    report = SolveReport(eq, image, solution, result, route, constants)
    if not result.passed:
        raise VerificationError(f"closed form failed verification: {result.summary()}", result)
    return report
