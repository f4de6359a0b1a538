from .compute import run_compute  # noqa: F401
from .selftest import run_selftest, SelftestReport, CheckResult  # noqa: F401
from .cache_admin import inspect_cache, clear_cache  # noqa: F401
