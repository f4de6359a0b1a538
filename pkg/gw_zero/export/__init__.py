from .jsonlite import results_to_jsonlite, checks_to_jsonlite, cache_entries_to_jsonlite  # noqa: F401
from .table import results_to_table, checks_to_table, cache_entries_to_table  # noqa: F401
