from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from delta_laplace.polys import Poly, RatFunc, interpolate, poly_gcd

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(small, min_size=1, max_size=4).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.tuples(polys, nonzero_polys).map(lambda t: RatFunc(*t))


def test_poly_basics():
    p = Poly([1, 1]) * Poly([-1, 1])
    assert p == Poly([-1, 0, 1])
    q, r = divmod(p, Poly([-1, 1]))
    assert q == Poly([1, 1]) and r.is_zero()
    assert Poly.x_minus_one_power(3) == Poly([-1, 3, -3, 1])
    assert Poly([0, 0, 1]).shift(1) == Poly([1, 2, 1])


def test_gcd_is_monic():
    a = Poly([-1, 0, 1]) * 3
    b = Poly([-2, 2])
    assert poly_gcd(a, b) == Poly([-1, 1])


def test_ratfunc_is_reduced_with_monic_denominator():
    r = RatFunc(Poly([-2, 0, 2]), Poly([-3, 3]))
    assert r.num == Poly([Fraction(2, 3), Fraction(2, 3)])
    assert r.den == Poly.const(1)
    assert RatFunc(Poly([1]), Poly([2, 2])).den.lead == 1


def test_interpolate_recovers_polynomial():
    p = Poly([3, -1, Fraction(1, 2), 2])
    assert interpolate([(k, p(k)) for k in range(4)]) == p


@settings(max_examples=60, deadline=None)
@given(ratfuncs)
def test_additive_inverse(a):
    assert (a + (-a)).is_zero()


@settings(max_examples=60, deadline=None)
@given(ratfuncs.filter(lambda r: not r.is_zero()))
def test_multiplicative_inverse(a):
    assert a * a.inverse() == RatFunc(1)


@settings(max_examples=40, deadline=None)
@given(ratfuncs, ratfuncs, ratfuncs)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(ratfuncs, st.integers(2, 9))
def test_value_matches_exact_evaluation(a, x):
    if a.den(x) == 0:
        return
    assert a(Fraction(x)) == a.num(Fraction(x)) / a.den(Fraction(x))
