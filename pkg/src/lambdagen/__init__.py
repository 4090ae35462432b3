"""Isomorph-free generation of (0,1)-matrices with k ones in every row and column."""

__version__ = "0.1.0"

from .bitcore import bit_at, k_subset_codes, popcount
from .canonical import (
    BudgetExceeded,
    CanonReport,
    apply_perms,
    are_equivalent,
    canonical_form,
    is_canonical,
    mu,
    sort_normalize,
)
from .codec import BinMatrix, cols_from_rows, cols_of, format_matrix, matrix_from_rows, parse_matrix, rows_of
from .semicanon import (
    EnumReport,
    LambdaSpec,
    candidate_space_size,
    check_lambda_semicanonical,
    enumerate_semicanonical,
    is_semicanonical,
    nu,
)
