"""Exact algebra of transform images, written in x = e^s.

An image is a finite sum  sum r_ab(x) L^a D^b  with rational-function
coefficients, where

    L = s - ln(e^s - 1)      (the image of 1/n)
    D = Li_2(e^-s)           (the image of 1/n^2)

so that d/ds x = x, dL/ds = -1/(x - 1) and dD/ds = -L.  The pipeline only
ever produces a != 0 or b != 0 one at a time; products such as L^2 appear
only as convolution images and are kept as formal monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ImproperRational, NotIntegrableInAlgebra, UnsupportedPole
from .polys import Poly, RatFunc

Monomial = tuple  # (power of L, power of D)

ONE_MONO: Monomial = (0, 0)
L_MONO: Monomial = (1, 0)
D_MONO: Monomial = (0, 1)

X = RatFunc.x()
X_MINUS_ONE = RatFunc(Poly([-1, 1]))


def _as_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    return RatFunc(value)


class SExpr:
    """Immutable element of the transform-domain algebra."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for mono, coeff in items:
            coeff = _as_ratfunc(coeff)
            acc[mono] = acc[mono] + coeff if mono in acc else coeff
        self._terms = tuple(sorted((m, c) for m, c in acc.items() if not c.is_zero()))

    @classmethod
    def rational(cls, r) -> "SExpr":
        return cls({ONE_MONO: r})

    @classmethod
    def from_parts(cls, r0=0, r1=0, r2=0) -> "SExpr":
        """r0 + r1 L + r2 D."""
        return cls({ONE_MONO: r0, L_MONO: r1, D_MONO: r2})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, mono: Monomial) -> RatFunc:
        return self.terms.get(mono, RatFunc(0))

    @property
    def r0(self) -> RatFunc:
        return self.coeff(ONE_MONO)

    @property
    def r1(self) -> RatFunc:
        return self.coeff(L_MONO)

    @property
    def r2(self) -> RatFunc:
        return self.coeff(D_MONO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(m == ONE_MONO for m, _ in self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly, RatFunc)):
            other = SExpr.rational(other)
        if not isinstance(other, SExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        other = _as_sexpr(other)
        if other is None:
            return NotImplemented
        return SExpr(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return SExpr((m, -c) for m, c in self._terms)

    def __sub__(self, other):
        other = _as_sexpr(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_sexpr(other)
        if other is None:
            return NotImplemented
        out = []
        for (a1, b1), c1 in self._terms:
            for (a2, b2), c2 in other._terms:
                out.append(((a1 + a2, b1 + b2), c1 * c2))
        return SExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = _as_ratfunc(other)
        return mul_rat(self, r.inverse())

    def __repr__(self):
        return f"SExpr({self.to_str()})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "x") -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self._terms:
            pieces.append(_term_str(mono, c, var))
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _mono_str(mono: Monomial) -> str:
    a, b = mono
    parts = []
    if a:
        parts.append("L" if a == 1 else f"L^{a}")
    if b:
        parts.append("D" if b == 1 else f"D^{b}")
    return "*".join(parts)


def _term_str(mono: Monomial, c: RatFunc, var: str) -> str:
    if mono == ONE_MONO:
        return c.to_str(var)
    m = _mono_str(mono)
    if c == RatFunc(1):
        return m
    if c == RatFunc(-1):
        return f"-{m}"
    if c.is_poly() and c.num.is_const():
        return f"{c.num[0]}*{m}"
    if c.num.is_const():
        k = c.num[0]
        head = m if k == 1 else f"-{m}" if k == -1 else f"{k}*{m}"
        den = RatFunc(1, c.den).to_str(var).split("/", 1)[1]
        return f"{head}/{den}"
    return f"({c.to_str(var)})*{m}"


def _as_sexpr(value):
    if isinstance(value, SExpr):
        return value
    if isinstance(value, (int, Fraction, Poly, RatFunc)):
        return SExpr.rational(value)
    return None


ZERO = SExpr()
ONE = SExpr.rational(1)
L = SExpr({L_MONO: 1})
D = SExpr({D_MONO: 1})


def add(a: SExpr, b: SExpr) -> SExpr:
    return a + b


def mul_rat(a: SExpr, r) -> SExpr:
    r = _as_ratfunc(r)
    return SExpr((m, c * r) for m, c in a._terms)


@dataclass(frozen=True)
class SExprWithConstant:
    """``particular + sum_i C_i * directions[i]`` with free scalars C_i."""

    particular: SExpr
    directions: tuple

    @property
    def constant_coefficient(self) -> SExpr:
        if len(self.directions) != 1:
            raise ValueError("expression has more than one free constant")
        return self.directions[0]

    def substitute(self, constants: Iterable[Fraction]) -> SExpr:
        out = self.particular
        for c, d in zip(constants, self.directions):
            out = out + mul_rat(d, RatFunc(Fraction(c)))
        return out


# -- calculus in s ------------------------------------------------------------


def diff_s(F: SExpr) -> SExpr:
    """d/ds, using dx/ds = x, dL/ds = -1/(x - 1), dD/ds = -L."""
    out = []
    inv = RatFunc.pole_at_one(1)
    for (a, b), r in F._terms:
        out.append(((a, b), X * r.derivative()))
        if a:
            out.append(((a - 1, b), -a * r * inv))
        if b:
            out.append(((a + 1, b - 1), -b * r))
    return SExpr(out)


def _series_div(num: Poly, den: Poly, order: int) -> list[Fraction]:
    """First ``order`` Taylor coefficients of num/den at 0 (den(0) != 0)."""
    out = []
    d0 = den[0]
    for k in range(order):
        acc = num[k] - sum((out[i] * den[k - i] for i in range(k)), Fraction(0))
        out.append(acc / d0)
    return out


def _split_rational(g: RatFunc):
    """Decompose g = q(x) + sum_j b_j / x^j + sum_j a_j / (x - 1)^j.

    Returns (q, {j: b_j}, {j: a_j}); raises if g has poles off {0, 1}.
    """
    den = g.den
    alpha = 0
    while den[0] == 0 and den.degree > 0:
        den = Poly(den.coeffs[1:])
        alpha += 1
    beta = den.degree
    if den != Poly.x_minus_one_power(beta):
        raise NotIntegrableInAlgebra(
            f"{g.to_str()} has poles away from x = 0 and x = 1; its antiderivative leaves the algebra"
        )
    at_one = {}
    if beta:
        # Taylor of num / x^alpha around x = 1, in y = x - 1
        series = _series_div(g.num.shift(1), Poly([1, 1]) ** alpha, beta)
        for j in range(1, beta + 1):
            if series[beta - j] != 0:
                at_one[j] = series[beta - j]
    at_zero = {}
    if alpha:
        series = _series_div(g.num, Poly.x_minus_one_power(beta), alpha)
        for j in range(1, alpha + 1):
            if series[alpha - j] != 0:
                at_zero[j] = series[alpha - j]
    rest = g
    for j, a in at_one.items():
        rest = rest - RatFunc.pole_at_one(j, a)
    for j, b in at_zero.items():
        rest = rest - RatFunc(Poly.const(b), Poly.monomial(j))
    assert rest.is_poly(), "principal parts did not exhaust the poles"
    return rest.num, at_zero, at_one


def _integrate_dx(g: RatFunc) -> tuple[RatFunc, Fraction, Fraction]:
    """Rational part of the x-antiderivative of g, plus log coefficients.

    Returns (R, c0, c1) with  int g dx = R + c0 ln x + c1 ln(x - 1).
    """
    q, at_zero, at_one = _split_rational(g)
    R = RatFunc(Poly([0] + [c / (k + 1) for k, c in enumerate(q.coeffs)]))
    for j, a in at_one.items():
        if j > 1:
            R = R + RatFunc.pole_at_one(j - 1, -a / (j - 1))
    for j, b in at_zero.items():
        if j > 1:
            R = R + RatFunc(Poly.const(-b / (j - 1)), Poly.monomial(j - 1))
    return R, at_zero.get(1, Fraction(0)), at_one.get(1, Fraction(0))


def _integrate_rational_s(r: RatFunc) -> SExpr:
    """int r(x) ds = int r(x)/x dx inside the algebra (rational + multiple of L)."""
    R, c0, c1 = _integrate_dx(r * RatFunc(1, Poly([0, 1])))
    # c0 ln x + c1 ln(x - 1) = c0 s + c1 (s - L); only c0 = -c1 stays in the algebra
    if c0 + c1 != 0:
        raise NotIntegrableInAlgebra(
            f"int {r.to_str()} ds has a bare s term; s alone is not in the algebra"
        )
    return SExpr.from_parts(R, -c1)


def antiderivative_s(F: SExpr) -> SExpr:
    """G with diff_s(G) == F, free constant omitted.

    Handles r0 + r1 L + r2 D where the required antiderivatives stay inside
    the algebra; anything else raises :class:`NotIntegrableInAlgebra`.
    """
    extra = [m for m in F.terms if m not in (ONE_MONO, L_MONO, D_MONO)]
    if extra:
        raise NotIntegrableInAlgebra(f"cannot integrate products of transcendental terms: {F}")
    inv_x = RatFunc(1, Poly([0, 1]))
    r0, r1, r2 = F.r0, F.r1, F.r2
    G = ZERO
    if r2:
        # d(u D) = x u' D - u L, so u = int r2/x dx must be rational
        u2, c0, c1 = _integrate_dx(r2 * inv_x)
        if c0 or c1:
            raise NotIntegrableInAlgebra(f"int ({r2.to_str()}) D ds needs a trilogarithm")
        G = G + mul_rat(D, u2)
        r1 = r1 + u2
    if r1:
        # d(u L + c D) = (x u' - c) L - u/(x - 1); pick c to absorb the 1/x residue
        _, c0, _ = _integrate_dx(r1 * inv_x)
        c = -c0
        u1, c0, c1 = _integrate_dx((r1 + c) * inv_x)
        if c0 or c1:
            raise NotIntegrableInAlgebra(
                f"int ({r1.to_str()}) L ds has no antiderivative in the basis {{1, L, D}}"
            )
        G = G + mul_rat(L, u1) + mul_rat(D, RatFunc(c))
        r0 = r0 + u1 * RatFunc.pole_at_one(1)
    if r0:
        G = G + _integrate_rational_s(r0)
    if diff_s(G) != F:
        raise NotIntegrableInAlgebra(f"antiderivative of {F} failed its derivative check")
    return G


# -- partial fractions --------------------------------------------------------


def partial_fractions_at_one(r: RatFunc) -> list[tuple[int, Fraction]]:
    """[(j, a_j)] with r = sum_j a_j (x - 1)^-j, for proper r with poles only at 1."""
    d = r.pole_order_at_one()
    if d is None:
        raise UnsupportedPole(f"{r.to_str()} has a pole away from x = 1")
    if not r.is_proper():
        raise ImproperRational(f"{r.to_str()} is not a proper rational function")
    shifted = r.num.shift(1)  # numerator in powers of y = x - 1
    return [(d - i, c) for i, c in reversed(list(enumerate(shifted.coeffs))) if c != 0]


def expand_at_one(r: RatFunc) -> list[tuple[int, Fraction]]:
    """Like :func:`partial_fractions_at_one` but allows a constant term (j = 0)."""
    d = r.pole_order_at_one()
    if d is None:
        raise UnsupportedPole(f"{r.to_str()} has a pole away from x = 1")
    if r.num.degree > d:
        raise ImproperRational(f"{r.to_str()} grows as x -> infinity")
    shifted = r.num.shift(1)
    return [(d - i, c) for i, c in reversed(list(enumerate(shifted.coeffs))) if c != 0]


# -- numerics -----------------------------------------------------------------

DILOG_TAIL = 1e-14


def dilog_exp_neg(s: float) -> float:
    """Li_2(e^-s) by its defining series, truncated once the geometric tail < 1e-14."""
    q = math.exp(-s)
    total, n, qn = 0.0, 1, q
    while True:
        total += qn / (n * n)
        if qn * q / (1.0 - q) < DILOG_TAIL:
            return total
        n += 1
        qn *= q


def eval_numeric(F: SExpr, s: float) -> float:
    """Floating-point value of F at real s > 0."""
    if not s > 0:
        raise ValueError("the transform is only defined for s > 0")
    y = math.expm1(s)
    basis_L = s - math.log(y)
    basis_D = dilog_exp_neg(s) if any(b for (_, b), _ in F._terms) else 0.0
    total = 0.0
    for (a, b), r in F._terms:
        total += r.eval_at_x_minus_one(y) * basis_L ** a * basis_D ** b
    return total


def central_difference(fn, s: float, h: float = 1e-5) -> float:
    return (fn(s + h) - fn(s - h)) / (2 * h)

