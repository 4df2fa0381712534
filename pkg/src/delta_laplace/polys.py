"""Dense univariate polynomials and rational functions over the rationals.

Both the sequence side (polynomials in ``n``) and the transform side
(rational functions in ``x = e^s``) are built on these two types.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial with :class:`Fraction` coefficients, lowest degree first.

    >>> Poly([1, 1]) * Poly([-1, 1])
    Poly(x^2 - 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def x_minus_one_power(cls, k: int) -> "Poly":
        """(x - 1)^k expanded."""
        return cls([comb(k, i) * (-1) ** (k - i) for i in range(k + 1)])

    @property
    def degree(self) -> int:
        # zero polynomial has degree -1
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        other = _as_poly(other)
        if other is None or other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv_lead = 1 / other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv_lead
            if c == 0:
                continue
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, a: Scalar) -> "Poly":
        """Return p(x + a)."""
        out = Poly()
        step = Poly([a, 1])
        for c in reversed(self.coeffs):
            out = out * step + c
        return out

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def content_denominator(self) -> int:
        """Least common multiple of the coefficient denominators."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // _gcd(d, c.denominator)
        return d

    def __repr__(self):
        return f"Poly({self.to_str('x')})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}" if mag.denominator == 1 else f"({mag}){power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return None


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (Euclid over the rationals)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> Poly:
    """Exact Lagrange interpolation through ``points``."""
    result = Poly()
    for i, (xi, yi) in enumerate(points):
        term = Poly.const(yi)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * Poly([-xj, 1])
                denom *= xi - xj
        result = result + term * (1 / denom)
    return result


class RatFunc:
    """Reduced quotient of polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly([0, 1]))

    @classmethod
    def pole_at_one(cls, k: int, c: Scalar = 1) -> "RatFunc":
        """c / (x - 1)^k."""
        return cls(Poly.const(c), Poly.x_minus_one_power(k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def is_proper(self) -> bool:
        return self.num.degree < self.den.degree

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_ratfunc(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def derivative(self) -> "RatFunc":
        """d/dx."""
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def eval_at_x_minus_one(self, y: float) -> float:
        """Float value at x = 1 + y; accurate when y is small."""
        return self.num.shift(1).eval_float(y) / self.den.shift(1).eval_float(y)

    def pole_order_at_one(self) -> int | None:
        """k if the denominator is exactly (x - 1)^k, else None."""
        k = self.den.degree
        return k if self.den == Poly.x_minus_one_power(k) else None

    def __repr__(self):
        return f"RatFunc({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        num = self.num.to_str(var)
        if self.is_poly():
            return num
        if len([c for c in self.num.coeffs if c]) > 1:
            num = f"({num})"
        k = self.pole_order_at_one()
        if k is not None:
            den = f"({var} - 1)" if k == 1 else f"({var} - 1)^{k}"
        else:
            den = self.den.to_str(var)
            if len([c for c in self.den.coeffs if c]) > 1:
                den = f"({den})"
        return f"{num}/{den}"


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RatFunc(value)
    return None


def lcm_all(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // _gcd(a, b), values, 1)
