"""Exact linear algebra over Z, Q, and GF(p)."""

from .abgroups import FgAbGroup, direct_sum, invariant_factors_of, tensor_fgab, tor_fgab
from .matrix import Matrix, integer_matrix
from .presentation import (
    GroupHom,
    HomologyPresentation,
    NotAComplexError,
    homology_of_pair,
    is_exact_at,
    squares_commute,
)
from .rings import GF, QQ, ZZ, ring_from_name
from .snf import (
    HAVE_COMPILED_KERNEL,
    SnfDecomposition,
    hermite_column_basis,
    smith_normal_form,
    smith_normal_form_pure,
)
from .solve import (
    diagonalize,
    in_column_span,
    kernel_basis,
    rank,
    solve,
    solve_in_lattice,
    solve_matrix,
)

__all__ = [
    "FgAbGroup", "direct_sum", "invariant_factors_of", "tensor_fgab", "tor_fgab",
    "Matrix", "integer_matrix",
    "GroupHom", "HomologyPresentation", "NotAComplexError",
    "homology_of_pair", "is_exact_at", "squares_commute",
    "GF", "QQ", "ZZ", "ring_from_name",
    "HAVE_COMPILED_KERNEL", "SnfDecomposition", "hermite_column_basis",
    "smith_normal_form", "smith_normal_form_pure",
    "diagonalize", "in_column_span", "kernel_basis", "rank",
    "solve", "solve_in_lattice", "solve_matrix",
]
