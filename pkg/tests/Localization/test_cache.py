import json
import os
from fractions import Fraction

from pytest import raises

from gw_zero.GeometryConfig import BundleSpec, GeometryConfig
from gw_zero.constants import INTERNAL
from gw_zero.exceptions import GraphCacheError
from gw_zero.localization import GraphCache, enumerate_graphs, euler_integral


def test_round_trip(tmp_path):
    cache = GraphCache(str(tmp_path))
    graphs = enumerate_graphs(2, 2, 1)
    path = cache.save(2, 2, 1, graphs)
    assert os.path.basename(path) == f'{INTERNAL.GRAPH_CACHE_PREFIX}_r2_d2_m1.json'
    assert cache.load(2, 2, 1) == graphs
    assert cache.load(2, 3, 1) is None


def test_cached_integral_matches(tmp_path):
    cache = GraphCache(str(tmp_path))
    quintic = GeometryConfig(4, BundleSpec([5]))
    first = euler_integral(quintic, 1, cache=cache)
    second = euler_integral(quintic, 1, cache=cache)
    assert first == second == 2875
    assert [entry['valid'] for entry in cache.inspect()] == [True]


def test_version_mismatch_regenerates(tmp_path):
    cache = GraphCache(str(tmp_path))
    path = cache.save(1, 2, 0, enumerate_graphs(1, 2, 0))
    with open(path) as f:
        payload = json.load(f)
    payload['format_version'] = INTERNAL.GRAPH_CACHE_FORMAT_VERSION + 1
    with open(path, 'w') as f:
        json.dump(payload, f)

    assert cache.load(1, 2, 0) is None
    assert cache.get_or_enumerate(1, 2, 0) == enumerate_graphs(1, 2, 0)
    assert cache.load(1, 2, 0) == enumerate_graphs(1, 2, 0)


def test_wrong_key_is_rejected(tmp_path):
    cache = GraphCache(str(tmp_path))
    path = cache.save(1, 2, 0, enumerate_graphs(1, 2, 0))
    with raises(GraphCacheError):
        cache._read(path, {'r': 1, 'd': 3, 'marks': 0})


def test_validate_finds_corruption(tmp_path):
    cache = GraphCache(str(tmp_path))
    cache.save(1, 1, 0, enumerate_graphs(1, 1, 0))
    cache.save(1, 2, 0, enumerate_graphs(1, 2, 0)[:1])  # incomplete graph set
    with open(cache.path_for(1, 3, 0), 'w') as f:
        f.write('{not json')

    report = dict(cache.validate())
    assert report[os.path.basename(cache.path_for(1, 1, 0))] is None
    assert 'differ' in report[os.path.basename(cache.path_for(1, 2, 0))]
    assert 'Unreadable' in report[os.path.basename(cache.path_for(1, 3, 0))]

    entries = {entry['file']: entry for entry in cache.inspect()}
    assert entries[os.path.basename(cache.path_for(1, 3, 0))]['valid'] is False


def test_clear(tmp_path):
    cache = GraphCache(str(tmp_path))
    cache.save(1, 1, 0, enumerate_graphs(1, 1, 0))
    cache.save(2, 1, 1, enumerate_graphs(2, 1, 1))
    (tmp_path / 'unrelated.txt').write_text('keep me')

    assert cache.clear() == 2
    assert cache.files() == []
    assert (tmp_path / 'unrelated.txt').exists()


def test_missing_directory_is_empty(tmp_path):
    assert GraphCache(str(tmp_path / 'nowhere')).inspect() == []


def test_tampered_automorphism_order_regenerates(tmp_path, caplog):
    cache = GraphCache(str(tmp_path))
    path = cache.save(1, 2, 0, enumerate_graphs(1, 2, 0))
    with open(path) as f:
        payload = json.load(f)
    payload['graphs'][0]['automorphism_order'] += 1
    with open(path, 'w') as f:
        json.dump(payload, f)

    with caplog.at_level('WARNING', logger='gw_zero'):
        assert cache.load(1, 2, 0) is None
    assert 'automorphism order' in caplog.text
    assert [entry['valid'] for entry in cache.inspect()] == [False]

    assert cache.get_or_enumerate(1, 2, 0) == enumerate_graphs(1, 2, 0)
    assert cache.load(1, 2, 0) == enumerate_graphs(1, 2, 0)
    assert euler_integral(GeometryConfig(1, BundleSpec([], [1, 1])), 2, cache=cache) == Fraction(1, 8)
