from .ProjClass import ProjClass, cup, integrate  # noqa: F401
from .schubert import (  # noqa: F401
    SchurIndex,
    schur_expand,
    schur_to_monomials,
    schubert_line_count,
)
