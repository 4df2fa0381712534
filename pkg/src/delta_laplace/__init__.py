"""Exact solutions of difference-equation IVPs by the discrete Laplace transform.

The transform  F(s) = sum_{n>=1} e^{-sn} f(n)  turns

* first and second forward differences into multiplication by (e^s - 1)^k,
* multiplication by n into -d/ds,
* causal convolution into a product,

so an IVP becomes an algebraic or first-order linear ODE problem in s.
Solving it exactly in x = e^s and inverting gives a closed form, which is
then checked against brute-force recurrence stepping.

>>> from delta_laplace import parse_equation, solve_ivp
>>> str(solve_ivp(parse_equation("D f = n ; f(1) = 1")).solution)
'1 + (n^2 - n)/2'
"""

from .dsl import parse_equation, parse_sequence
from .equation import Coefficient, DifferenceEquation, ICKind, InitialCondition, difference_ic, value_ic
from .errors import (
    AnchorUnreachable,
    ConstantUnsolvable,
    DeltaLaplaceError,
    ImproperRational,
    InconsistentIC,
    MissingInitialCondition,
    NonCausalImage,
    NotIntegrableInAlgebra,
    ParseError,
    SemanticError,
    SolverError,
    UnsupportedDifference,
    UnsupportedPole,
    UnsupportedSequence,
    VerificationError,
)
from .formatting import format_report, seq_to_latex, seq_to_text
from .oracle import VerificationResult, step_recurrence, truncated_transform, verify
from .polys import Poly, RatFunc
from .sdomain import (
    SExpr,
    SExprWithConstant,
    antiderivative_s,
    diff_s,
    eval_numeric,
    mul_rat,
    partial_fractions_at_one,
)
from .sequences import (
    Binom,
    Const,
    Conv,
    Harmonic,
    Mono,
    Recip,
    Scale,
    SeqExpr,
    Sum,
    convolve,
    evaluate,
    forward_difference,
    linear_combine,
)
from .solver import SolveReport, algebraic_solve, determine_constant, sdomain_ode_solve, solve_ivp
from .transform import TABLE, TransformPair, inverse_transform, transform, transform_difference, transform_times_n

__version__ = "0.1.0"
