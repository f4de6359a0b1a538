import os
from fractions import Fraction
from typing import List, Sequence, Union

from gw_zero.constants import METHOD


def parse_string(value: str) -> str:
    """
    Base string validator.
    :param value: The string to validate
    :return: The validated string
    """
    try:
        value = f'{value}'
    except ValueError as exc:
        raise ValueError(f"Invalid string: Can't cast type '{type(value)}' to string.") from exc
    if len(value) == 0:
        raise ValueError('Invalid string: Empty.')
    return value


def parse_int(value: Union[int, str]) -> int:
    if isinstance(value, bool):
        raise ValueError(f'Invalid integer: {value}')
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f'Invalid integer: {value}')
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise ValueError(f'Invalid integer: {value!r}') from exc


def parse_nonnegative_int(value: Union[int, str]) -> int:
    value = parse_int(value)
    if value < 0:
        raise ValueError(f'Expected a nonnegative integer, got {value}')
    return value


def parse_positive_int(value: Union[int, str]) -> int:
    value = parse_int(value)
    if value < 1:
        raise ValueError(f'Expected a positive integer, got {value}')
    return value


# Parse and validate an iterable of values, using h() to validate each value:
# [5], "2,2", 3
def parse_list(value: Sequence, h) -> List:
    if isinstance(value, str):
        value = [v for v in value.split(',') if v.strip()]
    elif not isinstance(value, Sequence):
        value = [value]
    try:
        return [h(a) for a in value]
    except ValueError as exc:
        raise ValueError(f'Invalid {h.__name__} list: {exc}') from exc


def parse_degree_list(value: Sequence[int]) -> List[int]:
    return parse_list(value, parse_positive_int)


def parse_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Exact rationals only: integers, Fractions or 'p/q' strings"""
    if isinstance(value, float):
        raise ValueError(f'Floats are not exact; pass {value} as a "p/q" string')
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f'Invalid rational: {value!r}') from exc


def _parse_choice(value: str, choices: Sequence[str], name: str) -> str:
    value = parse_string(value).lower()
    if value not in choices:
        raise ValueError(f'Invalid {name} {value!r}; choose from {list(choices)}')
    return value


def parse_method(value: str) -> str:
    return _parse_choice(value, (METHOD.LOCALIZATION, METHOD.MIRROR, METHOD.BOTH), 'method')


def parse_char_class(value: str) -> str:
    return _parse_choice(value, (METHOD.EULER, METHOD.CHERN_POLYNOMIAL), 'characteristic class')


def parse_output_format(value: str) -> str:
    return _parse_choice(value, (METHOD.TABLE, METHOD.JSON), 'output format')


def parse_directory(value: str) -> str:
    value = os.path.abspath(os.path.expanduser(parse_string(value)))
    if os.path.exists(value) and not os.path.isdir(value):
        raise ValueError(f'Not a directory: {value}')
    return value
