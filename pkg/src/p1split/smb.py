"""Successive minimum bases of k[T]-lattices in normed K_inf-vector spaces.

The greedy "pick the shortest vector outside the span so far" construction
is realized by column reduction of a polynomial matrix to weak Popov form:
an A-basis whose columns are orthogonal for the norm and sorted by norm is
already a successive minimum basis, so reduction plus a stable sort suffices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exceptions import DimensionMismatch, FieldMismatch, SingularMatrix
from .laurent import Laurent, as_laurent, check_weights, vector_gauge
from .matrix import check_square, column, det, from_columns, solve
from .polyring import INF, Poly
from .scalar import Field


@dataclass(frozen=True)
class Lattice:
    """The A-lattice spanned by the columns of ``basis``, with the weighted max-norm.

    ``weights[i]`` is the valuation of ``||e_i||``; all zeros gives the
    standard orthonormal basis.
    """

    field: Field
    basis: tuple
    weights: tuple = ()

    def __init__(self, basis, weights=None, field: Field | None = None, check: bool = True):
        d = check_square(basis)
        if field is None:
            field = _infer_field(basis)
        rows = tuple(tuple(as_laurent(x, field) for x in row) for row in basis)
        for row in rows:
            for x in row:
                if x.field != field:
                    raise FieldMismatch(f"entry over {x.field} in a lattice over {field}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "basis", rows)
        object.__setattr__(self, "weights", check_weights(weights, d))
        if check and not det([list(r) for r in rows]):
            raise SingularMatrix("lattice basis has zero determinant")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self):
        return [list(r) for r in self.basis]

    def vector(self, coeffs: Sequence) -> list:
        """The lattice vector ``sum_j coeffs[j] * basis[:, j]``."""
        d = self.dim
        if len(coeffs) != d:
            raise DimensionMismatch(f"expected {d} coefficients")
        out = []
        for i in range(d):
            acc = Laurent.zero(self.field)
            for j in range(d):
                if coeffs[j]:
                    acc = acc + self.basis[i][j] * coeffs[j]
            out.append(acc)
        return out


def _infer_field(M):
    for row in M:
        for x in row:
            f = getattr(x, "field", None)
            if f is not None:
                return f
    raise ValueError("cannot infer the base field from the matrix entries")


@dataclass(frozen=True)
class SMBResult:
    """Output of :func:`smb`.

    ``omegas`` holds the basis vectors as columns, ``U`` is unimodular with
    ``basis @ U == omegas`` and ``U_inv`` its inverse.  ``gauges`` are
    non-increasing (norms non-decreasing).
    """

    field: Field
    weights: tuple
    omegas: list
    U: list
    U_inv: list
    gauges: list
    pivot_rows: list
    iterations: int = 0
    degree_sum: int = 0
    shift: int = 0
    meta: dict = dc_field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return len(self.gauges)

    def omega(self, i: int) -> list:
        return column(self.omegas, i)


def _col_degree_pivot(col):
    deg = -INF
    piv = None
    for i, p in enumerate(col):
        if p.coeffs:
            di = len(p.coeffs) - 1
            if di >= deg:
                deg, piv = di, i
    return deg, piv


def weak_popov_reduce(M, *, tie_break: int | None = None, return_info: bool = False):
    """Reduce a nonsingular polynomial matrix to weak Popov form by column operations.

    Returns ``(M_reduced, U)`` with ``M_reduced = M @ U`` and ``det U`` a
    nonzero constant.  With ``return_info=True`` a third element is a dict
    holding ``U_inv``, ``pivots``, ``degrees``, ``iterations`` and
    ``degree_sum`` (the column-degree sum of the input).

    The pivot of a column is the largest row index attaining the column
    degree.  While two columns share a pivot row, the leading term of the one
    with larger degree (ties: larger column index) is cancelled against the
    other.  ``tie_break`` switches to seeded random choices among the
    colliding pairs; the output is then a different, equally valid reduction.
    """
    d = check_square(M)
    field = None
    for row in M:
        for p in row:
            if not isinstance(p, Poly):
                raise TypeError(f"weak_popov_reduce needs polynomial entries, got {p!r}")
            field = p.field
    zero, one = Poly.zero(field), Poly.one(field)
    cols = [column(M, j) for j in range(d)]
    ucols = [[one if i == j else zero for i in range(d)] for j in range(d)]
    uinv = [[one if i == j else zero for j in range(d)] for i in range(d)]
    info = [_col_degree_pivot(c) for c in cols]
    for j, (deg, _) in enumerate(info):
        if deg == -INF:
            raise SingularMatrix(f"column {j} is zero")
    degree_sum = sum(deg for deg, _ in info)
    rng = random.Random(tie_break) if tie_break is not None else None

    iterations = 0
    while True:
        by_pivot = {}
        for j, (_, piv) in enumerate(info):
            by_pivot.setdefault(piv, []).append(j)
        groups = [g for _, g in sorted(by_pivot.items()) if len(g) > 1]
        if not groups:
            break
        if rng is None:
            group = groups[-1]
            ranked = sorted(group, key=lambda j: (info[j][0], j))
            t, r = ranked[-1], ranked[-2]
        else:
            group = rng.choice(groups)
            a, b = rng.sample(group, 2)
            if info[a][0] < info[b][0]:
                a, b = b, a
            t, r = a, b
        deg_t, piv = info[t]
        deg_r = info[r][0]
        e = deg_t - deg_r
        c = field.div(cols[t][piv].lc, cols[r][piv].lc)
        cols[t] = [x - y.shift(e).scale(c) for x, y in zip(cols[t], cols[r])]
        ucols[t] = [x - y.shift(e).scale(c) for x, y in zip(ucols[t], ucols[r])]
        uinv[r] = [x + y.shift(e).scale(c) for x, y in zip(uinv[r], uinv[t])]
        iterations += 1
        info[t] = _col_degree_pivot(cols[t])
        if info[t][0] == -INF:
            raise SingularMatrix("a column reduced to zero: the matrix is singular")

    reduced = from_columns(cols)
    U = from_columns(ucols)
    if not return_info:
        return reduced, U
    return reduced, U, {
        "U_inv": uinv,
        "pivots": [piv for _, piv in info],
        "degrees": [deg for deg, _ in info],
        "iterations": iterations,
        "degree_sum": degree_sum,
    }


def smb(L: Lattice, *, tie_break: int | None = None) -> SMBResult:
    """Compute an orthogonal successive minimum basis of ``L``."""
    d, w, field = L.dim, L.weights, L.field
    # fold weights and denominators into one row-wise exponent shift
    shift = max(w[i] - x.low for i, row in enumerate(L.basis) for x in row if x.coeffs)
    P = [[x.shift(shift - w[i]).to_poly() for x in row] for i, row in enumerate(L.basis)]
    reduced, U, info = weak_popov_reduce(P, tie_break=tie_break, return_info=True)
    omegas = [[Laurent.from_poly(p).shift(w[i] - shift) for p in row] for i, row in enumerate(reduced)]
    gauges = [shift - deg for deg in info["degrees"]]

    order = sorted(range(d), key=lambda j: -gauges[j])
    return SMBResult(
        field=field,
        weights=w,
        omegas=[[row[j] for j in order] for row in omegas],
        U=[[row[j] for j in order] for row in U],
        U_inv=[info["U_inv"][j] for j in order],
        gauges=[gauges[j] for j in order],
        pivot_rows=[info["pivots"][j] for j in order],
        iterations=info["iterations"],
        degree_sum=info["degree_sum"],
        shift=shift,
    )


def shortest_vector(L: Lattice, **kw):
    S = smb(L, **kw)
    return S.omega(0), S.gauges[0]


def successive_minima(S: SMBResult) -> list:
    return list(S.gauges)


def leading_matrix(B, w=None):
    """Leading-coefficient matrix of the columns of ``B`` for the weighted norm.

    Entry ``(i, j)`` is the coefficient of ``B[i][j]`` at the exponent that
    would realize the gauge of column ``j`` in row ``i``.  Returns ``None``
    if some column is zero.
    """
    d = len(B)
    w = check_weights(w, d)
    cols = [column(B, j) for j in range(len(B[0]))]
    out = [[None] * len(cols) for _ in range(d)]
    for j, col in enumerate(cols):
        col = [as_laurent(x) for x in col]
        g = vector_gauge(col, w)
        if g == INF:
            return None
        for i in range(d):
            out[i][j] = col[i].coeff(w[i] - g)
    return out


def _rank_over(field, rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if not field.is_zero(rows[r][c])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][c])
        for r in range(len(rows)):
            if r != rank and not field.is_zero(rows[r][c]):
                f = field.mul(rows[r][c], inv)
                rows[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_orthogonal_basis(B, w=None) -> bool:
    """True iff no column is zero and the leading-coefficient matrix is invertible over k."""
    if not B or len(B) != len(B[0]):
        return False
    lead = leading_matrix(B, w)
    if lead is None:
        return False
    field = next(as_laurent(x).field for row in B for x in row)
    return _rank_over(field, lead) == len(B)


def span_coefficients(v: Sequence, S: SMBResult) -> list:
    """Coefficients ``lam`` (rational functions) with ``v = sum_j lam_j * omega_j``."""
    if len(v) != S.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in dimension {S.dim}")
    return solve(S.omegas, list(v))


def distance_to_span(v: Sequence, S: SMBResult, i: int):
    """Gauge of the distance from ``v`` to the span of the first ``i`` SMB vectors."""
    if not 0 <= i <= S.dim:
        raise ValueError(f"i must lie in [0, {S.dim}]")
    if i == S.dim:
        return INF
    lam = span_coefficients(v, S)
    return min(lam[j].val() + S.gauges[j] for j in range(i, S.dim))
