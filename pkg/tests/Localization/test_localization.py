import pickle
from fractions import Fraction

from pytest import raises

from gw_zero.GeometryConfig import BundleSpec, GeometryConfig
from gw_zero.constants import METHOD
from gw_zero.exceptions import DimensionMismatchError, WeightDegeneracyError
from gw_zero.localization import (
    CharClassSpec,
    FixedGraph,
    WeightVector,
    draw_weights,
    enumerate_graphs,
    euler_integral,
    graph_contribution,
    one_point_correlator,
    sum_contributions,
)
from gw_zero.localization.CharClassSpec import elementary_symmetric
from gw_zero.localization.integrals import with_generic_weights


def _geometry(r, convex=(), concave=()):
    return GeometryConfig(r, BundleSpec(convex, concave))


def run_test_graph_count(r, d, marks, count):
    graphs = enumerate_graphs(r, d, marks)
    assert len(graphs) == count
    assert len(set(graphs)) == count
    assert all(graph.degree == d and graph.marks == marks for graph in graphs)


def run_test_euler_integral(geometry, d, expected, char_class=None, parameter=None):
    b = CharClassSpec(char_class or METHOD.EULER, parameter if parameter is not None else 1)
    cfg = _geometry(**geometry)
    assert euler_integral(cfg, d, b) == Fraction(expected)


def run_test_one_point_correlator(geometry, d, n, a, twist, expected):
    cfg = _geometry(**geometry)
    assert one_point_correlator(cfg, d, n, a, twist) == Fraction(expected)


def test_canonical_graph_ignores_relabeling():
    a = FixedGraph.canonical([0, 1, 0], [(0, 1, 1), (1, 2, 2)])
    b = FixedGraph.canonical([0, 1, 0], [(2, 1, 1), (0, 1, 2)])
    assert a == b
    star = FixedGraph.canonical([0, 1, 1, 1], [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    assert star.automorphism_order == 6


def test_graph_validation():
    with raises(ValueError):
        FixedGraph([0, 0], [(0, 1, 1)])
    with raises(ValueError):
        FixedGraph([0, 1], [(0, 1, 0)])
    with raises(ValueError):
        FixedGraph([0, 1, 2], [(0, 1, 1)])


def test_graphs_pickle():
    graph = enumerate_graphs(2, 2, 1)[-1]
    assert pickle.loads(pickle.dumps(graph)) == graph
    assert FixedGraph.from_dict(graph.to_dict()) == graph


def test_enumeration_rejects_bad_input():
    with raises(ValueError):
        enumerate_graphs(0, 1)
    with raises(ValueError):
        enumerate_graphs(1, 0)
    with raises(ValueError):
        enumerate_graphs(1, 1, 2)


def test_weights_are_seeded():
    assert draw_weights(4, 1) == draw_weights(4, 1)
    assert draw_weights(4, 1, 0) != draw_weights(4, 1, 1)
    assert len(set(draw_weights(4, 5).values)) == 5
    with raises(ValueError):
        WeightVector([1, 1, 2])


def test_weight_independence():
    quintic = _geometry(4, [5])
    local_p1 = _geometry(1, concave=[1, 1])
    for seed in (1, 2, 3):
        assert euler_integral(quintic, 1, seed=seed) == 2875
        assert euler_integral(local_p1, 2, seed=seed) == Fraction(1, 8)


def test_chern_polynomial_weight_independence():
    cfg = _geometry(1, [2])
    b = CharClassSpec.chern_polynomial(Fraction(1, 3))
    values = {euler_integral(cfg, 2, b, seed=seed) for seed in (4, 5, 6)}
    assert len(values) == 1


def test_serial_and_parallel_sums_agree():
    cfg = _geometry(4, [5])
    graphs = enumerate_graphs(4, 2, 0)
    weights = draw_weights(4, 99)
    serial = sum_contributions(graphs, weights, cfg, processes=1)
    parallel = sum_contributions(graphs, weights, cfg, processes=3)
    assert serial == parallel == Fraction(4876875, 8)


def test_dimension_mismatch():
    with raises(DimensionMismatchError):
        euler_integral(_geometry(4, [4]), 1)
    with raises(ValueError):
        euler_integral(_geometry(4, [5]), 0)


def test_dimension_axiom_zeros():
    p4 = _geometry(4)
    for d in (1, 2):
        vdim = p4.vdim(d, marks=1)
        for n in range(vdim + 2):
            for a in range(6):
                if n + a != vdim or a > 4:
                    assert one_point_correlator(p4, d, n, a) == 0


def test_kernel_twist_identity_per_graph():
    cfg = _geometry(4, [5])
    weights = draw_weights(4, 3)
    lam = weights.as_fractions()
    for graph in enumerate_graphs(4, 2, 1):
        kernel = graph_contribution(graph, weights, cfg, twist=METHOD.TWIST_KERNEL)
        full = graph_contribution(graph, weights, cfg, twist=METHOD.TWIST_FULL)
        assert kernel * 5 * lam[graph.labels[graph.mark]] == full


def test_contribution_preconditions():
    cfg = _geometry(1)
    unmarked = enumerate_graphs(1, 1, 0)[0]
    with raises(ValueError):
        graph_contribution(unmarked, draw_weights(1, 0), cfg, descendant=(0, 1))
    with raises(ValueError):
        graph_contribution(unmarked, draw_weights(2, 0), cfg)
    with raises(ValueError):
        graph_contribution(unmarked, draw_weights(1, 0), cfg, twist='half')


def test_degenerate_weights_are_retried():
    seen = []

    def evaluate(weights):
        seen.append(weights)
        if len(seen) < 3:
            raise WeightDegeneracyError('zero denominator')
        return Fraction(7)

    assert with_generic_weights(2, 0, evaluate) == 7
    assert len(set(seen)) == 3


def test_degenerate_weights_give_up():
    def evaluate(weights):
        raise WeightDegeneracyError('always')

    with raises(WeightDegeneracyError):
        with_generic_weights(2, 0, evaluate)


def test_elementary_symmetric():
    roots = [Fraction(1), Fraction(-2), Fraction(1, 3)]
    assert elementary_symmetric(roots, 0) == 1
    assert elementary_symmetric(roots, 1) == Fraction(-2, 3)
    assert elementary_symmetric(roots, 2) == Fraction(-2) + Fraction(1, 3) + Fraction(-2, 3)
    assert elementary_symmetric(roots, 3) == Fraction(-2, 3)
    assert elementary_symmetric(roots, 4) == 0
    assert elementary_symmetric(roots, -1) == 0
