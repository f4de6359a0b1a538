from .JSeries import JSeries, MirrorConfig  # noqa: F401
from .i_function import i_function  # noqa: F401
from .mirror_map import mirror_map  # noqa: F401
from .extract import extract_gw  # noqa: F401
from .assemble import assemble_j_from_correlators  # noqa: F401
