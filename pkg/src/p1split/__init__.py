"""Exact successive minimum bases of k[T]-lattices and splitting types of bundles on P^1."""

__version__ = "0.1.0"

from .exceptions import (DimensionMismatch, DivisionByZero, EnumerationCapExceeded, FieldMismatch,
                         P1SplitError, SingularMatrix, UnsupportedField, VerificationError)
from .laurent import Laurent, decompose, is_in_unit_ball, vector_gauge
from .oracle import OracleReport, brute_minima, oracle_compare
from .polyring import Poly, RatFun, poly_divmod, val_inf
from .scalar import QQ, PrimeField, Rationals, Scalar, scalar_arith
from .smb import (Lattice, SMBResult, distance_to_span, is_orthogonal_basis, shortest_vector, smb,
                  successive_minima, weak_popov_reduce)
from .splitter import Splitting, VerifyReport, split, split_rational, verify_splitting

__all__ = [
    "DimensionMismatch", "DivisionByZero", "EnumerationCapExceeded", "FieldMismatch", "P1SplitError",
    "SingularMatrix", "UnsupportedField", "VerificationError", "Laurent", "decompose",
    "is_in_unit_ball", "vector_gauge", "OracleReport", "brute_minima", "oracle_compare", "Poly",
    "RatFun", "poly_divmod", "val_inf", "QQ", "PrimeField", "Rationals", "Scalar", "scalar_arith",
    "Lattice", "SMBResult", "distance_to_span", "is_orthogonal_basis", "shortest_vector", "smb",
    "successive_minima", "weak_popov_reduce", "Splitting", "VerifyReport", "split",
    "split_rational", "verify_splitting",
]
