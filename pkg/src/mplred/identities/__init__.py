"""Golden expression data, the identity catalog, and the reduction pipelines."""

from .golden import golden_names, load_expr, load_li5_expr
from .records import IdentityRecord, catalog, find, verify_record

__all__ = [
    "golden_names",
    "load_expr",
    "load_li5_expr",
    "IdentityRecord",
    "catalog",
    "find",
    "verify_record",
]
