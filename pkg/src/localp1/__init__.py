"""Equivariant genus-zero BPS invariants of local P^1 by torus-fixed sheaf counts."""
from .enumeration import CountTable, compositions, count_by_type, count_total, count_type
from .predictions import (bps_closed_form, bps_from_count, closed_form_count, gv_invert,
                          gv_sum, sign_and_dimension)
from .sheafconfig import ModuleConfig, SheafType, Stratum

__version__ = "0.1.0"

__all__ = [
    "CountTable", "compositions", "count_by_type", "count_total", "count_type",
    "bps_closed_form", "bps_from_count", "closed_form_count", "gv_invert", "gv_sum",
    "sign_and_dimension", "ModuleConfig", "SheafType", "Stratum", "__version__",
]
