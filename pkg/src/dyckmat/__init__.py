"""Non-overlapping binary matrices whose rows are built from Dyck words."""

from .errors import ResourceLimitError
from .words import (
    Overlap,
    catalan,
    enumerate_dyck,
    is_dyck,
    is_self_non_overlapping,
    is_type_alpha,
    strings_overlap,
    type_alpha_from,
)
from .setgen import (
    BinaryMatrix,
    RowKind,
    SetSpec,
    anchor_row,
    classify_row,
    enumerate_set,
    last_row_choices,
    middle_row_choices,
    rank,
    unrank,
    validate_member,
)
from .overlap import Offset, OverlapWitness, matrices_non_overlapping, overlap_at, verify_set
from .census import cardinality, cardinality_even, cardinality_odd, compare_orientations, cross_check, emit_table
from .expand import build_z, find_compatible_rows, find_expansion_strings, verify_expansion

__version__ = "0.1.0"
