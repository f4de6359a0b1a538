import json
from typing import Dict, Iterator

from gw_zero import GW_LOGGER


def encode(payload: Dict) -> Iterator[str]:
    yield from json.JSONEncoder(indent=2, sort_keys=True).iterencode(payload)


def results_to_jsonlite(results) -> Iterator[str]:
    """
    Structured records, one per degree, with every rational as an exact 'p/q' string.
    Holds no timings, so identical runs produce identical bytes.
    """
    GW_LOGGER.info('started translating results to jsonlite format')
    geometry = results.geometry.to_dict() if results.geometry is not None else None
    yield from encode(
        {
            'geometry': geometry,
            'pipelines_agree': results.pipelinesAgree,
            'records': results.to_dicts(),
        }
    )


def checks_to_jsonlite(report) -> Iterator[str]:
    yield from encode(
        {
            'passed': report.passed,
            'checks': [check.to_dict() for check in report],
        }
    )


def cache_entries_to_jsonlite(entries) -> Iterator[str]:
    yield from encode({'entries': list(entries)})
