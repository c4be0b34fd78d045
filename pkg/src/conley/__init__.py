"""Exact computation of reduced homological Conley indices for basic sets
presented by structure matrices or signed transition graphs, with Jordan
block profiles, homology zeta functions and Morse-inequality checks.

All arithmetic is exact (arbitrary-precision rationals and integer
polynomials); nothing in this package touches floating point.
"""

from .dynamics import (BasicSetSpec, ConleyIndex, IndexEntry, MorseReport,
                       StructureMatrix, SystemSpec, VertexShiftSpec,
                       build_structure_matrix, conley_index, count_periodic,
                       enumerate_periodic_oracle, lefschetz_series,
                       morse_split_check, zeta_basic_set, zeta_via_index)
from .errors import (ConleyError, DomainError, InvariantError,
                     ResourceError, ShapeError, ValidationError)
from .linalg import (Rational, RationalMatrix, Subspace, char_reversed,
                     char_reversed_rational, column_space, inverse,
                     kernel_basis, mat_mul, rank, solve_columns)
from .poly import (IntPolynomial, RationalFunction, poly_divmod, poly_gcd,
                   poly_mul, ratfunc_inv, ratfunc_mul,
                   squarefree_decomposition)
from .spectral import (KIND_COMPLEX, KIND_RATIONAL, KIND_UNRESOLVED,
                       EigenClass, InducedMap, JordanProfile,
                       generalized_image, generalized_kernel,
                       invariant_factors, is_similar, jordan_profile,
                       nonnilpotent_part)
from .system_io import parse_system, system_from_dict, system_to_dict

__version__ = "0.1.0"

__all__ = [
    "BasicSetSpec", "ConleyIndex", "ConleyError", "DomainError",
    "EigenClass", "IndexEntry", "InducedMap", "IntPolynomial",
    "InvariantError", "JordanProfile", "KIND_COMPLEX", "KIND_RATIONAL",
    "KIND_UNRESOLVED", "MorseReport", "Rational", "RationalFunction",
    "RationalMatrix", "ResourceError", "ShapeError", "StructureMatrix",
    "Subspace",
    "SystemSpec", "ValidationError", "VertexShiftSpec",
    "build_structure_matrix", "char_reversed", "char_reversed_rational",
    "column_space", "conley_index", "count_periodic",
    "enumerate_periodic_oracle", "generalized_image", "generalized_kernel",
    "inverse", "invariant_factors", "is_similar", "jordan_profile",
    "kernel_basis", "lefschetz_series", "mat_mul", "morse_split_check",
    "nonnilpotent_part", "parse_system", "poly_divmod", "poly_gcd",
    "poly_mul", "rank", "ratfunc_inv", "ratfunc_mul", "solve_columns",
    "squarefree_decomposition", "system_from_dict", "system_to_dict",
    "zeta_basic_set", "zeta_via_index",
]
