import random
from fractions import Fraction

from pytest import raises

from gw_zero.GeometryConfig import GeometryConfig
from gw_zero.exceptions import InvariantTableError
from gw_zero.instanton import (
    InstantonTable,
    InvariantTable,
    check_integrality,
    invert_multicover,
    resum_multicover,
)
from gw_zero.mirror import MirrorConfig, extract_gw, i_function, mirror_map


def _table(values):
    return InvariantTable({d: Fraction(v) for d, v in enumerate(values, start=1)})


def run_test_invert_multicover(N, n, integral):
    table = invert_multicover(_table(N))
    assert [table[d] for d in range(1, len(n) + 1)] == [Fraction(v) for v in n]
    assert check_integrality(table) == {d: flag for d, flag in enumerate(integral, start=1)}


def test_quintic_instantons_through_degree_five():
    cfg = MirrorConfig(GeometryConfig.named('quintic'), 5)
    N = extract_gw(mirror_map(i_function(cfg))[1], cfg)
    table = invert_multicover(_table(N))
    assert [table[d] for d in range(1, 6)] == [
        2875,
        609250,
        317206375,
        242467530000,
        229305888887625,
    ]
    assert all(check_integrality(table).values())
    assert resum_multicover(table) == _table(N).entries


def test_round_trip_random_tables():
    rng = random.Random(5)
    for _ in range(100):
        N = [Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(rng.randint(1, 8))]
        assert resum_multicover(invert_multicover(_table(N))) == _table(N).entries


def test_pure_multiple_covers():
    for c in (Fraction(1), Fraction(-3, 7), Fraction(12)):
        table = invert_multicover(_table([c / d**3 for d in range(1, 7)]))
        assert table[1] == c
        assert all(table[d] == 0 for d in range(2, 7))


def test_non_integral_values_are_flagged():
    table = invert_multicover(_table([1, Fraction(1, 2)]))
    assert check_integrality(table) == {1: True, 2: False}


def test_missing_degrees():
    with raises(InvariantTableError):
        InvariantTable({1: Fraction(1), 3: Fraction(2)})
    with raises(InvariantTableError):
        _table([1])[2]


def test_instanton_table_keeps_source():
    source = _table([2875])
    table = invert_multicover(source)
    assert isinstance(table, InstantonTable)
    assert table.source is source
