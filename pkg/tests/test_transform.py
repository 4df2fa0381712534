import math
from fractions import Fraction

import pytest

from delta_laplace import sequences as seq
from delta_laplace.errors import MissingInitialCondition, NonCausalImage, UnsupportedPole
from delta_laplace.oracle import terms_needed, truncated_transform
from delta_laplace.polys import Poly, RatFunc
from delta_laplace.sdomain import D, L, SExpr, central_difference, eval_numeric, mul_rat
from delta_laplace.transform import (
    TABLE,
    inverse_transform,
    transform,
    transform_difference,
    transform_times_n,
)

from conftest import TABLE_FUNCS


def rat(num, k):
    return SExpr.rational(RatFunc(Poly(num), Poly.x_minus_one_power(k)))


def test_forward_examples():
    assert transform(seq.ONE) == rat([1], 1)
    assert transform(seq.N) == rat([0, 1], 2)
    assert transform(seq.Recip(1)) == L
    assert transform(seq.Mono(2)) == rat([0, 1, 1], 3)


def test_n_squared_against_series():
    value, tail = truncated_transform(seq.Mono(2), 1.0, terms_needed(seq.Mono(2), 1.0))
    assert abs(value - eval_numeric(rat([0, 1, 1], 3), 1.0)) <= 1e-10


@pytest.mark.parametrize("pair", TABLE, ids=lambda p: p.name)
def test_table_rows_are_derived(pair):
    assert transform(pair.sequence) == pair.image


@pytest.mark.parametrize("pair", TABLE, ids=lambda p: p.name)
@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_table_rows_match_truncated_series(pair, s):
    N = terms_needed(pair.sequence, s)
    value, tail = truncated_transform(pair.sequence, s, N)
    assert tail < 1e-12
    assert abs(value - eval_numeric(pair.image, s)) <= 10 * tail


def test_times_n_examples():
    assert transform_times_n(rat([1], 1)) == rat([0, 1], 2)
    assert transform_times_n(rat([0, 1], 2)) == rat([0, 1, 1], 3)
    assert transform_times_n(SExpr()) == SExpr()


def test_transform_difference_examples():
    first = transform_difference(1, 1)
    assert first.A == RatFunc(Poly([-1, 1])) and first.B == SExpr.rational(-1)
    second = transform_difference(2, 1, 2)
    assert second.A == RatFunc(Poly([1, -2, 1])) and second.B == SExpr.rational(Poly([-1, -1]))
    zero = transform_difference(2, 0, 0)
    assert zero.B.is_zero()
    with pytest.raises(MissingInitialCondition):
        transform_difference(1)
    with pytest.raises(MissingInitialCondition):
        transform_difference(2, 1)


@pytest.mark.parametrize("name", ["1", "n", "n^2"])
def test_difference_rule(name):
    f = TABLE_FUNCS[name][0]
    diff = seq.forward_difference(f)
    form = transform_difference(1, seq.evaluate(f, 1))
    assert transform(diff) == mul_rat(transform(f), form.A) + form.B


def test_difference_rule_on_harmonic():
    f = seq.Harmonic(2)
    form = transform_difference(1, 0)
    assert transform(seq.forward_difference(f)) == mul_rat(transform(f), form.A) + form.B


def test_inverse_examples():
    first = inverse_transform(rat([1], 1) + rat([0, 1], 3))
    assert [first(n) for n in range(1, 30)] == [1 + Fraction(n * n - n, 2) for n in range(1, 30)]
    second = inverse_transform(rat([1], 2) + rat([0, 1], 2) + rat([0, 1], 4))
    assert [second(n) for n in range(1, 30)] == [2 * n - 1 + Fraction(n * (n - 1) * (n - 2), 6) for n in range(1, 30)]
    third = inverse_transform(rat([1], 1) + mul_rat(L, RatFunc.pole_at_one(1)))
    assert third == seq.linear_combine([(1, seq.ONE), (1, seq.Harmonic(1))])


def test_inverse_of_higher_pole_times_L_is_explicit_convolution():
    f = inverse_transform(mul_rat(L, RatFunc.pole_at_one(2)))
    assert isinstance(f, seq.Conv)
    # (1/n) * 1 * 1 evaluated by brute force
    for n in range(1, 25):
        expected = sum((Fraction(1, k) * (n - k - 1) for k in range(1, n - 1)), Fraction(0))
        assert f(n) == expected


def test_inverse_errors():
    with pytest.raises(NonCausalImage):
        inverse_transform(SExpr.rational(1))
    with pytest.raises(NonCausalImage):
        inverse_transform(rat([0, 0, 1], 1))
    with pytest.raises(UnsupportedPole):
        inverse_transform(SExpr.rational(RatFunc(1, Poly([-2, 1]))))


ROUND_TRIP = [p.sequence for p in TABLE] + [
    seq.linear_combine([(3, seq.Mono(3)), (-2, seq.Recip(1)), (Fraction(1, 2), seq.Harmonic(2))]),
    seq.convolve(seq.Recip(1), seq.Recip(2)),
    seq.convolve(seq.Harmonic(1), seq.ONE),
    seq.convolve(seq.Mono(2), seq.Recip(1)),
]


@pytest.mark.parametrize("f", ROUND_TRIP, ids=repr)
def test_round_trip(f):
    back = inverse_transform(transform(f))
    assert seq.values(back, 100) == seq.values(f, 100)
    assert transform(back) == transform(f)


@pytest.mark.parametrize("fname", sorted(TABLE_FUNCS))
@pytest.mark.parametrize("gname", sorted(TABLE_FUNCS))
def test_convolution_theorem(fname, gname):
    f, g = TABLE_FUNCS[fname][0], TABLE_FUNCS[gname][0]
    conv = seq.convolve(f, g)
    product = transform(f) * transform(g)
    assert transform(conv) == product
    value, tail = truncated_transform(conv, 1.0, terms_needed(conv, 1.0))
    assert abs(value - eval_numeric(product, 1.0)) <= 1e-10


@pytest.mark.parametrize("name", sorted(TABLE_FUNCS))
@pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
def test_multiply_by_n_rule(name, s):
    f = TABLE_FUNCS[name][0]
    F = transform(f)
    nf = transform(seq.times_n(f))
    assert nf == transform_times_n(F)
    fd = -central_difference(lambda t: eval_numeric(F, t), s, 1e-5)
    value = eval_numeric(nf, s)
    assert abs(value - fd) <= 1e-6 * abs(value)
