"""The discrete Laplace transform  F(s) = sum_{n>=1} e^{-sn} f(n).

Images are :class:`~delta_laplace.sdomain.SExpr` values in x = e^s.  Forward
transforms go through linearity, a small table and the convolution theorem;
the inverse is defined on images whose coefficients are polynomials in
1/(x - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import sequences as seq
from .errors import ImproperRational, MissingInitialCondition, NonCausalImage, UnsupportedSequence
from .polys import Poly, RatFunc
from .sdomain import D, L, ONE_MONO, SExpr, diff_s, expand_at_one, mul_rat, partial_fractions_at_one
from .sequences import SeqExpr


@lru_cache(maxsize=None)
def _power_image(k: int) -> SExpr:
    # l{n^k} = (-d/ds)^k l{1}
    F = SExpr.rational(RatFunc.pole_at_one(1))
    for _ in range(k):
        F = transform_times_n(F)
    return F


def transform(f: SeqExpr) -> SExpr:
    """Image of a closed-form sequence."""
    if isinstance(f, seq.Const):
        return SExpr.rational(RatFunc.pole_at_one(1, f.value))
    if isinstance(f, seq.Mono):
        return _power_image(f.k)
    if isinstance(f, seq.Binom):
        return SExpr.rational(RatFunc.pole_at_one(f.j + 1))
    if isinstance(f, seq.Recip):
        return L if f.m == 1 else D
    if isinstance(f, seq.Harmonic):
        # H^{(m)} = (1/n^m) * 1
        return mul_rat(L if f.m == 1 else D, RatFunc.pole_at_one(1))
    if isinstance(f, seq.Scale):
        return mul_rat(transform(f.child), RatFunc(f.coeff))
    if isinstance(f, seq.Sum):
        out = SExpr()
        for t in f.terms:
            out = out + transform(t)
        return out
    if isinstance(f, seq.Conv):
        return transform(f.left) * transform(f.right)
    raise UnsupportedSequence(f"no transform rule for {f!r}")


def transform_times_n(F: SExpr) -> SExpr:
    """Image of n f(n) given the image F of f: -dF/ds."""
    return -diff_s(F)


@dataclass(frozen=True)
class LinearForm:
    """A(x) F + B, the image of a difference of the unknown sequence."""

    A: RatFunc
    B: SExpr

    def __str__(self):
        return f"({self.A.to_str()})*F + ({self.B})"


def boundary_coefficients(order: int) -> tuple[RatFunc, ...]:
    """Coefficients of f(1), f(2), ... in the constant part of l{Delta^order f}."""
    if order == 1:
        return (RatFunc(-1),)
    if order == 2:
        # l{f(n+2)} = x^2 F - x f(1) - f(2)
        return (RatFunc(Poly([2, -1])), RatFunc(-1))
    raise ValueError(f"difference order {order} is not supported")


def transform_difference(order: int, f1=None, df1=None) -> LinearForm:
    """Image of Delta^order f as a linear form in F = l{f}.

    Order 1 needs f(1); order 2 needs f(1) and Delta f(1).
    """
    if order not in (1, 2):
        raise ValueError(f"difference order {order} is not supported")
    if f1 is None:
        raise MissingInitialCondition("the transform of a difference needs f(1)")
    A = RatFunc(Poly([-1, 1])) ** order
    if order == 1:
        values = (Fraction(f1),)
    else:
        if df1 is None:
            raise MissingInitialCondition("the transform of a second difference needs Delta f(1)")
        values = (Fraction(f1), Fraction(f1) + Fraction(df1))
    B = SExpr()
    for c, v in zip(boundary_coefficients(order), values):
        B = B + SExpr.rational(c * v)
    return LinearForm(A, B)


def _basis_sequence(a: int, b: int, j: int) -> SeqExpr:
    """Inverse of L^a D^b / (x - 1)^j: (1/n)^{*a} * (1/n^2)^{*b} * 1^{*j}."""
    factors = [seq.Recip(1)] * a + [seq.Recip(2)] * b
    if j:
        factors.append(seq.convolve_power_of_one(j))
    if not factors:
        raise NonCausalImage("a constant image has no causal inverse on n >= 1")
    out = factors[0]
    for g in factors[1:]:
        out = seq.convolve(out, g)
    return out


def inverse_transform(F: SExpr) -> SeqExpr:
    """Closed-form sequence whose image is F.

    The rational part must be proper with poles only at x = 1; coefficients of
    L and D may additionally carry a constant term (c L <-> c/n).
    """
    terms = []
    for (a, b), r in sorted(F.terms.items()):
        if (a, b) == ONE_MONO:
            try:
                expansion = partial_fractions_at_one(r)
            except ImproperRational as exc:
                raise NonCausalImage(str(exc)) from None
        else:
            try:
                expansion = expand_at_one(r)
            except ImproperRational as exc:
                raise NonCausalImage(str(exc)) from None
        for j, c in expansion:
            terms.append((c, _basis_sequence(a, b, j)))
    return seq.linear_combine(terms)


@dataclass(frozen=True)
class TransformPair:
    name: str
    sequence: SeqExpr
    image: SExpr


def _x_over(num, k):
    return SExpr.rational(RatFunc(Poly(num), Poly.x_minus_one_power(k)))


# Images written out by hand so tests can compare them against `transform`.
TABLE = (
    TransformPair("1", seq.ONE, _x_over([1], 1)),
    TransformPair("n", seq.N, _x_over([0, 1], 2)),
    TransformPair("n^2", seq.Mono(2), _x_over([0, 1, 1], 3)),
    TransformPair("n^3", seq.Mono(3), _x_over([0, 1, 4, 1], 4)),
    TransformPair("1/n", seq.Recip(1), L),
    TransformPair("1/n^2", seq.Recip(2), D),
    TransformPair("C(n-1,2)", seq.Binom(2), _x_over([1], 3)),
    TransformPair("H_{n-1}", seq.Harmonic(1), mul_rat(L, RatFunc.pole_at_one(1))),
    TransformPair("H^{(2)}_{n-1}", seq.Harmonic(2), mul_rat(D, RatFunc.pole_at_one(1))),
)
