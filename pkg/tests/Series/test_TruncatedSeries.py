import random
from fractions import Fraction

from pytest import raises

from gw_zero.cohomology import ProjClass
from gw_zero.exceptions import SeriesDomainError, SeriesPrecisionError
from gw_zero.series import (
    HbarLaurent,
    TruncatedSeries,
    exp_reversion,
    series_compose,
    series_exp_log,
    series_invert,
    series_mul,
)

CASES = 100


def _random_series(rng: random.Random, order: int, constant=None) -> TruncatedSeries:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return TruncatedSeries(coeffs, order)


def run_test_series_invert(coeffs, expected):
    a = TruncatedSeries([Fraction(c) for c in coeffs], len(expected) - 1)
    assert series_invert(a) == TruncatedSeries([Fraction(c) for c in expected])


def run_test_exp_reversion(g, expected):
    g = TruncatedSeries([Fraction(c) for c in g])
    q = exp_reversion(g, len(expected) - 1)
    assert q == TruncatedSeries([Fraction(c) for c in expected])


def test_ring_axioms():
    rng = random.Random(7)
    for _ in range(CASES):
        order = rng.randint(0, 6)
        a, b, c = (_random_series(rng, order) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == TruncatedSeries([], order)
        assert a * TruncatedSeries.one(order) == a


def test_truncation_is_to_the_smaller_order():
    a = TruncatedSeries([1, 2, 3, 4], 3)
    b = TruncatedSeries([1, 1], 1)
    assert (a * b).order == 1
    assert (a + b) == TruncatedSeries([2, 3], 1)


def test_inverse_round_trip():
    rng = random.Random(11)
    for _ in range(CASES):
        order = rng.randint(0, 7)
        a = _random_series(rng, order, constant=rng.choice([1, -2, Fraction(3, 4)]))
        assert series_mul(a, series_invert(a)) == TruncatedSeries.one(order)


def test_exp_log_round_trip():
    rng = random.Random(13)
    for _ in range(CASES):
        order = rng.randint(1, 6)
        a = _random_series(rng, order, constant=0)
        assert series_exp_log(series_exp_log(a, 'exp'), 'log') == a
        b = _random_series(rng, order, constant=1)
        assert series_exp_log(series_exp_log(b, 'log'), 'exp') == b


def test_exp_reversion_round_trip():
    rng = random.Random(17)
    for _ in range(CASES):
        order = rng.randint(1, 6)
        g = _random_series(rng, order, constant=0)
        q_of_Q = exp_reversion(g, order)
        Q_of_q = TruncatedSeries.variable(order) * series_exp_log(g, 'exp')
        assert series_compose(q_of_Q, Q_of_q) == TruncatedSeries.variable(order)


def test_non_unit_inverse():
    with raises(SeriesDomainError):
        series_invert(TruncatedSeries([0, 1, 2]))


def test_exp_log_preconditions():
    with raises(SeriesDomainError):
        series_exp_log(TruncatedSeries([1, 1]), 'exp')
    with raises(SeriesDomainError):
        series_exp_log(TruncatedSeries([2, 1]), 'log')
    with raises(ValueError):
        series_exp_log(TruncatedSeries([0, 1]), 'sin')


def test_reversion_needs_enough_input():
    with raises(SeriesPrecisionError):
        exp_reversion(TruncatedSeries([0, 1], 1), 3)
    with raises(SeriesDomainError):
        exp_reversion(TruncatedSeries([1, 1]))


def test_coefficient_above_order():
    with raises(SeriesPrecisionError):
        TruncatedSeries([1, 2], 1)[2]


def test_domains_do_not_mix():
    rational = TruncatedSeries([1, 1])
    classes = TruncatedSeries([ProjClass.one(2), ProjClass.hyperplane(2)])
    with raises(SeriesDomainError):
        series_mul(rational, classes)
    with raises(SeriesDomainError):
        series_compose(rational, classes)


def test_rational_series_scale_coefficient_series():
    H = ProjClass.hyperplane(2)
    classes = TruncatedSeries([ProjClass.one(2), H], 1)
    scaled = TruncatedSeries([2, 3], 1) * classes
    assert scaled[0] == ProjClass.one(2) * 2
    assert scaled[1] == ProjClass.one(2) * 3 + H * 2


def test_hbar_laurent_window():
    x = HbarLaurent.monomial(2, 1, -1, 1, window=-2)
    assert (x * x).coefficient(2, -2) == 1
    assert not (x * x * x)
    with raises(SeriesPrecisionError):
        HbarLaurent.monomial(2, 0, -3, 1, window=-2)


def test_hbar_laurent_inverse():
    unit = HbarLaurent(2, {0: ProjClass(2, [2, 1])})
    assert unit * unit.inverse() == HbarLaurent.one(2)
    with raises(SeriesDomainError):
        HbarLaurent.monomial(2, 0, -1).inverse()


def _random_class(rng: random.Random, r: int) -> ProjClass:
    return ProjClass(r, [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(r + 1)])


def _random_laurent(rng: random.Random, r: int, window: int) -> HbarLaurent:
    terms = {-k: _random_class(rng, r) for k in range(-window + 1) if rng.random() < 0.6}
    return HbarLaurent(r, terms, window)


def test_windowed_hbar_ring_axioms():
    rng = random.Random(19)
    for _ in range(CASES):
        r = rng.randint(0, 3)
        window = rng.randint(-5, 0)
        a, b, c = (_random_laurent(rng, r, window) for _ in range(3))
        one = HbarLaurent.one(r, window)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a
        assert a - a == HbarLaurent.zero(r, window)


def test_class_ring_axioms():
    rng = random.Random(23)
    for _ in range(CASES):
        r = rng.randint(0, 5)
        a, b, c = (_random_class(rng, r) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a.is_unit():
            assert a * a.inverse() == ProjClass.one(r)
            assert a**-2 * a**2 == ProjClass.one(r)


def test_series_over_windowed_hbar_ring_axioms():
    rng = random.Random(29)
    for _ in range(CASES // 4):
        r = rng.randint(0, 2)
        window = rng.randint(-3, 0)
        order = rng.randint(0, 3)
        zero = HbarLaurent.zero(r, window)
        a, b, c = (
            TruncatedSeries([_random_laurent(rng, r, window) for _ in range(order + 1)], order, zero)
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_hbar_window_product_is_associative():
    window = -4
    low = HbarLaurent.monomial(0, 0, -3, window=window)
    assert (low * low) * low == low * (low * low) == HbarLaurent.zero(0, window)


def test_positive_hbar_powers_are_rejected():
    with raises(SeriesDomainError):
        HbarLaurent.monomial(2, 0, 3)
    with raises(SeriesDomainError):
        HbarLaurent(2, {1: ProjClass.one(2)}, window=-4)
    with raises(SeriesDomainError):
        HbarLaurent.from_hbar_polynomial(ProjClass.one(2), 1)
    with raises(SeriesPrecisionError):
        HbarLaurent.zero(2, window=1)
    assert HbarLaurent.monomial(2, 1, -1).coefficient(1, 2) == 0
