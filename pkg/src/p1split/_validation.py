"""Input checks shared by the estimators and the CLI."""

from __future__ import annotations

from .exceptions import DimensionMismatch, FieldMismatch
from .laurent import Laurent, check_weights
from .polyring import Poly, RatFun
from .smb import Lattice


def check_gluing_matrix(X, field=None):
    """Validate a square matrix of Poly/Laurent/RatFun entries over one field.

    Returns ``(rows, field, is_rational)``; polynomial entries are promoted to
    Laurent so downstream code sees at most two entry types.
    """
    if isinstance(X, Lattice):
        return [list(r) for r in X.basis], X.field, False
    try:
        rows = [list(r) for r in X]
    except TypeError:
        raise TypeError(f"expected a square matrix (sequence of rows), got {type(X).__name__}") from None
    d = len(rows)
    if d == 0 or any(len(r) != d for r in rows):
        raise DimensionMismatch("expected a non-empty square matrix")
    rational = False
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if isinstance(x, Poly):
                row[j] = x = Laurent.from_poly(x)
            elif isinstance(x, RatFun):
                rational = True
            elif not isinstance(x, Laurent):
                raise TypeError(f"entry ({i}, {j}) is {type(x).__name__}, expected Poly, Laurent or RatFun")
            if field is None:
                field = x.field
            elif x.field != field:
                raise FieldMismatch(f"entry ({i}, {j}) is over {x.field}, expected {field}")
    return rows, field, rational


def check_vectors(X, d):
    """Columns of ``X`` are vectors of length ``d``."""
    rows = [list(r) for r in X]
    if len(rows) != d:
        raise DimensionMismatch(f"expected {d} rows, got {len(rows)}")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows


__all__ = ["check_gluing_matrix", "check_vectors", "check_weights"]
