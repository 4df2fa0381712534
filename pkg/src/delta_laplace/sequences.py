"""Closed-form sequences f : {1, 2, 3, ...} -> Q.

Expressions are immutable trees. :func:`linear_combine` brings any tree to
canonical form: a ``Sum`` of (possibly scaled) atoms, where the polynomial
part is collected into ``Const`` and ``Mono`` terms and every other atom
(``Recip``, ``Harmonic``, irreducible ``Conv``) appears once.

Convolution uses the causal convention

    (f * g)(n) = sum_{k=1}^{n-1} f(k) g(n-k),

which is empty at n = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .errors import UnsupportedDifference, UnsupportedSequence
from .polys import Poly, interpolate

Rat = Fraction
Number = Union[int, Fraction]


class SeqExpr:
    """Base class for sequence expressions; supports ``+``, ``-`` and scalar ``*``."""

    __slots__ = ()

    def __call__(self, n: int) -> Fraction:
        return evaluate(self, n)

    def values(self, count: int) -> list[Fraction]:
        return values(self, count)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Const(other)
        if not isinstance(other, SeqExpr):
            return NotImplemented
        return linear_combine([(1, self), (1, other)])

    __radd__ = __add__

    def __neg__(self):
        return linear_combine([(-1, self)])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Const(other)
        if not isinstance(other, SeqExpr):
            return NotImplemented
        return linear_combine([(1, self), (-1, other)])

    def __rsub__(self, other):
        return Const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return linear_combine([(other, self)])
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return linear_combine([(1, self)]) == ZERO

    def __str__(self):
        from .formatting import seq_to_text

        return seq_to_text(self)


@dataclass(frozen=True, repr=False)
class Const(SeqExpr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def __repr__(self):
        return f"Const({self.value})"


@dataclass(frozen=True, repr=False)
class Mono(SeqExpr):
    """n^k for k >= 1."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("Mono exponent must be >= 1; use Const for n^0")

    def __repr__(self):
        return f"Mono({self.k})"


@dataclass(frozen=True, repr=False)
class Recip(SeqExpr):
    """1/n^m, m in {1, 2}."""

    m: int

    def __post_init__(self):
        if self.m not in (1, 2):
            raise UnsupportedSequence(f"1/n^{self.m} is outside the supported class (m must be 1 or 2)")

    def __repr__(self):
        return f"Recip({self.m})"


@dataclass(frozen=True, repr=False)
class Harmonic(SeqExpr):
    """sum_{k=1}^{n-1} 1/k^m, m in {1, 2}; zero at n = 1."""

    m: int

    def __post_init__(self):
        if self.m not in (1, 2):
            raise UnsupportedSequence(f"harmonic sums of order {self.m} are not supported")

    def __repr__(self):
        return f"Harmonic({self.m})"


@dataclass(frozen=True, repr=False)
class Binom(SeqExpr):
    """C(n-1, j); the inverse transform of (x - 1)^-(j+1)."""

    j: int

    def __post_init__(self):
        if self.j < 0:
            raise ValueError("Binom index must be >= 0")

    def __repr__(self):
        return f"Binom({self.j})"


@dataclass(frozen=True, repr=False)
class Scale(SeqExpr):
    coeff: Fraction
    child: SeqExpr

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def __repr__(self):
        return f"Scale({self.coeff}, {self.child!r})"


@dataclass(frozen=True, repr=False)
class Sum(SeqExpr):
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __repr__(self):
        return f"Sum({', '.join(map(repr, self.terms))})"


@dataclass(frozen=True, repr=False)
class Conv(SeqExpr):
    left: SeqExpr
    right: SeqExpr

    def __repr__(self):
        return f"Conv({self.left!r}, {self.right!r})"


ZERO = Sum(())
ONE = Const(1)
N = Mono(1)


# -- evaluation ---------------------------------------------------------------


def evaluate(f: SeqExpr, n: int) -> Fraction:
    """Exact value of ``f`` at index ``n >= 1``."""
    if n < 1:
        raise ValueError(f"sequences are indexed from 1, got n={n}")
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Mono):
        return Fraction(n ** f.k)
    if isinstance(f, Recip):
        return Fraction(1, n ** f.m)
    if isinstance(f, Harmonic):
        return sum((Fraction(1, k ** f.m) for k in range(1, n)), Fraction(0))
    if isinstance(f, Binom):
        return Fraction(comb(n - 1, f.j))
    if isinstance(f, Scale):
        return f.coeff * evaluate(f.child, n)
    if isinstance(f, Sum):
        return sum((evaluate(t, n) for t in f.terms), Fraction(0))
    if isinstance(f, Conv):
        if n == 1:
            return Fraction(0)
        lv = values(f.left, n - 1)
        rv = values(f.right, n - 1)
        return sum((lv[k - 1] * rv[n - k - 1] for k in range(1, n)), Fraction(0))
    raise TypeError(f"not a sequence expression: {f!r}")


def values(f: SeqExpr, count: int) -> list[Fraction]:
    """[f(1), ..., f(count)], sharing work across indices."""
    if count <= 0:
        return []
    if isinstance(f, Harmonic):
        out, acc = [], Fraction(0)
        for n in range(1, count + 1):
            out.append(acc)
            acc += Fraction(1, n ** f.m)
        return out
    if isinstance(f, Scale):
        return [f.coeff * v for v in values(f.child, count)]
    if isinstance(f, Sum):
        out = [Fraction(0)] * count
        for t in f.terms:
            for i, v in enumerate(values(t, count)):
                out[i] += v
        return out
    if isinstance(f, Conv):
        lv = values(f.left, count)
        rv = values(f.right, count)
        return [
            sum((lv[k - 1] * rv[n - k - 1] for k in range(1, n)), Fraction(0))
            for n in range(1, count + 1)
        ]
    return [evaluate(f, n) for n in range(1, count + 1)]


# -- canonical form -----------------------------------------------------------


def _atom_key(atom: SeqExpr):
    order = {Recip: 0, Harmonic: 1, Conv: 2}
    return (order[type(atom)], repr(atom))


def _add_atom(atoms: dict, atom: SeqExpr, c: Fraction):
    atoms[atom] = atoms.get(atom, Fraction(0)) + c
    if atoms[atom] == 0:
        del atoms[atom]


def _collect(f: SeqExpr) -> tuple[Poly, dict]:
    """Split ``f`` into (polynomial in n, {non-polynomial atom: coefficient})."""
    if isinstance(f, Const):
        return Poly.const(f.value), {}
    if isinstance(f, Mono):
        return Poly.monomial(f.k), {}
    if isinstance(f, Binom):
        return binom_poly(f.j), {}
    if isinstance(f, (Recip, Harmonic)):
        return Poly(), {f: Fraction(1)}
    if isinstance(f, Scale):
        p, atoms = _collect(f.child)
        if f.coeff == 0:
            return Poly(), {}
        return p * f.coeff, {a: c * f.coeff for a, c in atoms.items()}
    if isinstance(f, Sum):
        p, atoms = Poly(), {}
        for t in f.terms:
            tp, tatoms = _collect(t)
            p = p + tp
            for a, c in tatoms.items():
                _add_atom(atoms, a, c)
        return p, atoms
    if isinstance(f, Conv):
        return _convolve_collected(_collect(f.left), _collect(f.right))
    raise TypeError(f"not a sequence expression: {f!r}")


def _build(p: Poly, atoms: dict) -> SeqExpr:
    terms = []
    if p[0] != 0:
        terms.append(Const(p[0]))
    for k in range(1, p.degree + 1):
        if p[k] != 0:
            terms.append(Mono(k) if p[k] == 1 else Scale(p[k], Mono(k)))
    for atom in sorted(atoms, key=_atom_key):
        c = atoms[atom]
        terms.append(atom if c == 1 else Scale(c, atom))
    if len(terms) == 1:
        return terms[0]
    return Sum(tuple(terms))


def polynomial(coeffs: Iterable[Number]) -> SeqExpr:
    """Canonical expression for sum_k coeffs[k] n^k."""
    return _build(Poly(coeffs), {})


def as_polynomial(f: SeqExpr) -> Poly | None:
    """The polynomial p with f(n) = p(n), or None if ``f`` has other atoms."""
    p, atoms = _collect(f)
    return None if atoms else p


def binom_poly(j: int) -> Poly:
    """C(n-1, j) as a polynomial in n."""
    p = Poly.const(1)
    for i in range(1, j + 1):
        p = p * Poly([-i, 1])
    return p * Fraction(1, factorial(j))


def linear_combine(terms: Iterable[tuple[Number, SeqExpr]]) -> SeqExpr:
    """Canonical form of sum_i c_i f_i."""
    p, atoms = Poly(), {}
    for c, f in terms:
        c = Fraction(c)
        if c == 0:
            continue
        fp, fatoms = _collect(f)
        p = p + fp * c
        for a, ac in fatoms.items():
            _add_atom(atoms, a, ac * c)
    if p.is_zero() and not atoms:
        return ZERO
    return _build(p, atoms)


def simplify(f: SeqExpr) -> SeqExpr:
    return linear_combine([(1, f)])


def terms_of(f: SeqExpr) -> list[tuple[Fraction, SeqExpr]]:
    """Canonical (coefficient, atom) list; the polynomial part uses Const(1) and Mono(k)."""
    f = simplify(f)
    items = f.terms if isinstance(f, Sum) else (f,)
    out = []
    for t in items:
        if isinstance(t, Const):
            out.append((t.value, ONE))
        elif isinstance(t, Scale):
            out.append((t.coeff, t.child))
        else:
            out.append((Fraction(1), t))
    return out


# -- convolution --------------------------------------------------------------


def _poly_convolve(p: Poly, q: Poly) -> Poly:
    # sum_{k=1}^{n-1} p(k) q(n-k) is a polynomial in n of degree <= deg p + deg q + 1
    # for all n >= 1, so interpolating through enough exact samples recovers it.
    degree = max(p.degree, 0) + max(q.degree, 0) + 1
    points = []
    for n in range(1, degree + 2):
        points.append((n, sum((p(k) * q(n - k) for k in range(1, n)), Fraction(0))))
    return interpolate(points)


def _convolve_collected(f, g) -> tuple[Poly, dict]:
    fp, fatoms = f
    gp, gatoms = g
    out_p = _poly_convolve(fp, gp) if fp and gp else Poly()
    out = {}

    def cross(poly: Poly, atom: SeqExpr, c: Fraction):
        # table: c * (1/n^m) * 1 = c * Harmonic(m)
        if poly.is_const() and isinstance(atom, Recip):
            _add_atom(out, Harmonic(atom.m), c * poly[0])
            return
        left, right = sorted((_build(poly, {}), atom), key=repr)
        _add_atom(out, Conv(left, right), c)

    if fp:
        for a, c in gatoms.items():
            cross(fp, a, c)
    if gp:
        for a, c in fatoms.items():
            cross(gp, a, c)
    for a, ca in fatoms.items():
        for b, cb in gatoms.items():
            left, right = sorted((a, b), key=repr)
            _add_atom(out, Conv(left, right), ca * cb)
    return out_p, out


def convolve(f: SeqExpr, g: SeqExpr) -> SeqExpr:
    """Causal convolution with closed forms where the rewrite table applies.

    Polynomial * polynomial collapses to a polynomial (this covers 1*1 = n - 1,
    n*1 = (n^2 - n)/2 and the repeated 1^{*j} = C(n-1, j-1)), constant *
    1/n^m becomes a harmonic sum, and any other pair stays as an explicit
    ``Conv`` node evaluated by summation.
    """
    p, atoms = _convolve_collected(_collect(f), _collect(g))
    if p.is_zero() and not atoms:
        return ZERO
    return _build(p, atoms)


def convolve_power_of_one(j: int) -> SeqExpr:
    """1 * 1 * ... * 1 (j factors) = C(n-1, j-1)."""
    if j < 1:
        raise ValueError("need at least one factor")
    return _build(binom_poly(j - 1), {})


# -- operators ----------------------------------------------------------------


def forward_difference(f: SeqExpr, order: int = 1) -> SeqExpr:
    """Closed form of the forward difference applied ``order`` times."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    for _ in range(order):
        f = _difference_once(f)
    return f


def _difference_once(f: SeqExpr) -> SeqExpr:
    p, atoms = _collect(f)
    out_p = p.shift(1) - p
    out = {}
    for atom, c in atoms.items():
        if isinstance(atom, Harmonic):
            _add_atom(out, Recip(atom.m), c)
        elif isinstance(atom, Conv) and as_polynomial(atom.right) is not None and as_polynomial(atom.right).is_const():
            # (g * k)(n+1) - (g * k)(n) = k g(n)
            gp, gatoms = _collect(atom.left)
            k = as_polynomial(atom.right)[0]
            out_p = out_p + gp * (c * k)
            for a, ac in gatoms.items():
                _add_atom(out, a, ac * c * k)
        elif isinstance(atom, Conv) and as_polynomial(atom.left) is not None and as_polynomial(atom.left).is_const():
            gp, gatoms = _collect(atom.right)
            k = as_polynomial(atom.left)[0]
            out_p = out_p + gp * (c * k)
            for a, ac in gatoms.items():
                _add_atom(out, a, ac * c * k)
        else:
            raise UnsupportedDifference(f"the forward difference of {atom!r} has no closed form in this class")
    if out_p.is_zero() and not out:
        return ZERO
    return _build(out_p, out)


def times_n(f: SeqExpr) -> SeqExpr:
    """n * f(n)."""
    p, atoms = _collect(f)
    out_p = p * Poly([0, 1])
    out = {}
    for atom, c in atoms.items():
        if isinstance(atom, Recip) and atom.m == 1:
            out_p = out_p + c
        elif isinstance(atom, Recip):
            _add_atom(out, Recip(atom.m - 1), c)
        else:
            raise UnsupportedSequence(f"n * {atom!r} is outside the supported class")
    if out_p.is_zero() and not out:
        return ZERO
    return _build(out_p, out)


def shift_values(vals: Sequence[Fraction], order: int) -> list[Fraction]:
    """Forward differences of a list of values (length shrinks by ``order``)."""
    out = list(vals)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out
