import json

from gw_zero.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, main
from gw_zero.run import compute as compute_module


def test_compute_json(capsys):
    argv = ['compute', '--geometry', 'quintic', '--max-degree', '2', '--format', 'json']
    assert main(argv) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['pipelines_agree'] is True
    assert [r['N'] for r in payload['records']] == ['2875', '4876875/8']
    assert [r['n'] for r in payload['records']] == ['2875', '609250']


def test_seed_override_gives_identical_output(capsys):
    base = ['compute', '--r', '1', '--concave', '1', '--concave', '1', '--max-degree', '3',
            '--method', 'localization', '--format', 'json']
    assert main(base + ['--seed', '1']) == EXIT_OK
    first = capsys.readouterr().out
    assert main(base + ['--seed', '2']) == EXIT_OK
    assert capsys.readouterr().out == first


def test_flags_override_config_file(tmp_path, capsys):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'r': 4, 'convex': [5], 'max_degree': 3, 'method': 'mirror'}))
    assert main(['compute', '--config', str(path), '--max-degree', '1', '--format', 'json']) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload['records']) == 1
    assert payload['records'][0]['provenance'] == 'mirror'


def test_invalid_configuration_exit_code(capsys):
    argv = ['compute', '--r', '3', '--convex', '3', '--max-degree', '2', '--method', 'mirror']
    assert main(argv) == EXIT_INVALID
    assert 'invalid configuration' in capsys.readouterr().err


def test_missing_config_file(tmp_path):
    assert main(['compute', '--config', str(tmp_path / 'absent.json')]) == EXIT_INVALID


def test_disagreement_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(compute_module, '_mirror_invariants', lambda opts: {1: 1})
    assert main(['compute', '--geometry', 'quintic', '--max-degree', '1']) == EXIT_FAILED
    assert 'localization 2875 vs mirror 1' in capsys.readouterr().err


def test_selftest_with_corrupted_cache(tmp_path, capsys):
    (tmp_path / 'graphs_r4_d1_m0.json').write_text('not json')
    assert main(['selftest', '--cache-dir', str(tmp_path)]) == EXIT_FAILED
    assert 'FAIL' in capsys.readouterr().out


def test_cache_commands(tmp_path, capsys):
    cache = ['--cache-dir', str(tmp_path)]
    assert main(['cache', 'inspect', '--format', 'json'] + cache) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['entries'] == []

    assert main(['compute', '--geometry', 'local-p1', '--max-degree', '1', '--method', 'localization'] + cache) == EXIT_OK
    capsys.readouterr()
    assert main(['cache', 'inspect', '--format', 'json'] + cache) == EXIT_OK
    entries = json.loads(capsys.readouterr().out)['entries']
    assert [(e['r'], e['d'], e['marks'], e['valid']) for e in entries] == [(1, 1, 0, True)]

    assert main(['cache', 'clear'] + cache) == EXIT_OK
    assert 'removed 1' in capsys.readouterr().out


def test_cache_needs_directory(monkeypatch):
    monkeypatch.delenv('GW_ZERO_CACHE_DIR', raising=False)
    assert main(['cache', 'inspect']) == EXIT_INVALID
