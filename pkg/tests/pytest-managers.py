from typing import List

import os
import pathlib
import yaml

from Series.test_TruncatedSeries import run_test_exp_reversion, run_test_series_invert
from Cohomology.test_schubert import run_test_schubert_line_count
from Localization.test_localization import (
    run_test_euler_integral,
    run_test_graph_count,
    run_test_one_point_correlator,
)
from Mirror.test_mirror import run_test_extract_gw, run_test_j_closed_form
from Instanton.test_multicover import run_test_invert_multicover
from RunOptions.test_RunOptions import (
    run_test_RunOptions,
    run_test_RunOptions_check,
    run_test_RunOptions_validator,
    run_test_validator_map_validate,
)
from Run.test_run import run_test_compute


# gw_zero.series Tests
def test_series_invert(**args) -> None:
    test_info = args['test_info']
    run_test_series_invert(test_info['series'], test_info['inverse'])


def test_exp_reversion(**args) -> None:
    test_info = args['test_info']
    run_test_exp_reversion(test_info['g'], test_info['q'])


# gw_zero.cohomology Tests
def test_schubert_line_count(**args) -> None:
    """
    Lines on a zero locus counted on the Grassmannian of lines
    """
    test_info = args['test_info']
    run_test_schubert_line_count(
        test_info['r'], test_info['degrees'], test_info['expected'], test_info['error']
    )


# gw_zero.localization Tests
def test_graph_count(**args) -> None:
    test_info = args['test_info']
    run_test_graph_count(test_info['r'], test_info['d'], test_info['marks'], test_info['count'])


def test_euler_integral(**args) -> None:
    """
    Exact K_d by summing over fixed-point graphs
    """
    test_info = args['test_info']
    geometry = get_resource(test_info['geometry'])
    run_test_euler_integral(
        geometry,
        test_info['d'],
        test_info['expected'],
        test_info.get('char_class'),
        test_info.get('parameter'),
    )


def test_one_point_correlator(**args) -> None:
    test_info = args['test_info']
    geometry = get_resource(test_info['geometry'])
    run_test_one_point_correlator(
        geometry,
        test_info['d'],
        test_info['n'],
        test_info['a'],
        test_info['twist'],
        test_info['expected'],
    )


# gw_zero.mirror Tests
def test_extract_gw(**args) -> None:
    test_info = args['test_info']
    geometry = get_resource(test_info['geometry'])
    run_test_extract_gw(geometry, test_info['max_degree'], test_info['expected'])


def test_j_closed_form(**args) -> None:
    """
    Correlator bracket assembled by localization against the hypergeometric series
    """
    test_info = args['test_info']
    geometry = get_resource(test_info['geometry'])
    run_test_j_closed_form(geometry, test_info['max_degree'])


# gw_zero.instanton Tests
def test_invert_multicover(**args) -> None:
    test_info = args['test_info']
    run_test_invert_multicover(test_info['N'], test_info['n'], test_info['integral'])


# gw_zero.RunOptions Tests
def test_validator_map_validate(**args) -> None:
    test_info = args['test_info']
    key = get_resource(test_info['key'])
    value = get_resource(test_info['value'])
    output = get_resource(test_info['output'])

    run_test_validator_map_validate(key, value, output)


def test_RunOptions_validator(**kargs) -> None:
    test_info = kargs['test_info']
    validator_name = get_resource(test_info['validator'])
    param = get_resource(test_info['input'])
    output = get_resource(test_info['output'])
    error = get_resource(test_info['error'])
    run_test_RunOptions_validator(validator_name, param, output, error)


def test_RunOptions(**kwargs) -> None:
    run_test_RunOptions(**kwargs)


def test_RunOptions_check(**args) -> None:
    test_info = args['test_info']
    run_test_RunOptions_check(get_resource(test_info['options']), test_info['error'])


# gw_zero.run Tests
def test_compute(**args) -> None:
    """
    Full pipeline runs, compared record by record
    """
    test_info = args['test_info']
    options = get_resource(test_info['options'])
    expected = get_resource(test_info['expected'])
    run_test_compute(options, expected, test_info['pipelines_agree'])


# Finds and loads file from yml_tests/Resources/ if loaded field ends with .yml/yaml extension
def get_resource(yml_file):
    if isinstance(yml_file, str):
        if yml_file.endswith(('.yml', '.yaml')):
            base_path = pathlib.Path(__file__).parent.resolve()
            with open(os.path.join(base_path, 'yml_tests', 'Resources', yml_file), 'r') as f:
                try:
                    return yaml.safe_load(f)
                except yaml.YAMLError as exc:
                    print(exc)
    elif isinstance(yml_file, List):  # check if it's a list of yml files
        if len(yml_file) > 0:
            if isinstance(yml_file[0], str):
                if yml_file[0].endswith(('.yml', '.yaml')):
                    return [get_resource(file) for file in yml_file]

    return yml_file
