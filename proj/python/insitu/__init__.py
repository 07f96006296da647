"""Direct solvers for A x = b built on in-place Gram-Schmidt orthonormalization.

Row mode returns the minimum-norm solution, column mode a least-squares
solution. Both also expose the generalized inverse G and the null-space
projector P = 1 - G A, and both can run as streaming solvers.
"""

from ._core import (
    ArgumentError,
    ComputationError,
    ParseError,
    StateError,
    OnlineColSolver,
    OnlineRowSolver,
    classify_col_method,
    classify_row_method,
    col_orthonormalize,
    null_projector,
    parse_matrix_market,
    penrose_check,
    profile_col_solver,
    profile_row_solver,
    row_orthonormalize,
    solve_col_lsq,
    solve_matrix_rhs,
    solve_row_minnorm,
    to_matrix_market,
)

__all__ = [
    "ArgumentError",
    "ComputationError",
    "ParseError",
    "StateError",
    "OnlineColSolver",
    "OnlineRowSolver",
    "classify_col_method",
    "classify_row_method",
    "col_orthonormalize",
    "null_projector",
    "parse_matrix_market",
    "penrose_check",
    "profile_col_solver",
    "profile_row_solver",
    "row_orthonormalize",
    "solve_col_lsq",
    "solve_matrix_rhs",
    "solve_row_minnorm",
    "to_matrix_market",
]
