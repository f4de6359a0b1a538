from gw_zero import GW_LOGGER

from .validators import (
    parse_char_class,
    parse_degree_list,
    parse_directory,
    parse_int,
    parse_method,
    parse_nonnegative_int,
    parse_output_format,
    parse_positive_int,
    parse_rational,
)


def validate(key, value):
    if key not in validator_map:
        error_msg = f'Key "{key}" is not a valid run option.'
        # See if they just mixed up dashes and underscores:
        for valid_key in validator_map:
            if key.replace('-', '_').lower() == valid_key:
                error_msg += f' (Did you mean "{valid_key}"?)'
                break
        GW_LOGGER.error(error_msg)
        raise KeyError(error_msg)
    try:
        return validator_map[key](value)
    except ValueError as exc:
        GW_LOGGER.exception(f'Failed to parse item in RunOptions: {key=} {value=} {exc=}')
        raise


validator_map = {
    # Geometry                Parser
    'r': parse_positive_int,
    'convex': parse_degree_list,
    'concave': parse_degree_list,
    # Computation parameters  Parser
    'max_degree': parse_nonnegative_int,
    'method': parse_method,
    'char_class': parse_char_class,
    'chern_parameter': parse_rational,
    'seed': parse_int,
    'processes': parse_positive_int,
    # Output parameters       Parser
    'output_format': parse_output_format,
    'cache_dir': parse_directory,
}
