"""Splitting type and factorization certificate of a rank-d bundle on P^1.

A bundle is presented by a gluing matrix ``M``: its columns span the
k[T]-lattice of sections over the affine chart, and the unit ball of the
(weighted) max-norm is the O_inf-lattice at infinity.  The splitting type is
read off a successive minimum basis, and the certificate is the exact
factorization ``M = W @ D @ U`` with ``U`` in GL_d(k[T]), ``W`` in
GL_d(O_inf) and ``D = diag(T**-n_1, ..., T**-n_d)``.

Orientation: ``n_i`` is the gauge of the i-th successive minimum, so the
type is non-increasing and ``sum(n) = val(det M) + sum(weights)``, i.e.
``deg E = val(det M)`` for the standard norm.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .exceptions import DimensionMismatch, VerificationError
from .laurent import Laurent, as_laurent, check_weights
from .matrix import check_square, det, mat_equal, mat_mul, to_ratfun
from .polyring import Poly, RatFun, poly_lcm
from .scalar import Field
from .smb import Lattice, SMBResult, _infer_field, smb


@dataclass(frozen=True)
class Splitting:
    n: list
    W: list
    D: list
    U: list
    shift: int
    field: Field
    weights: tuple
    smb: SMBResult | None = None

    @property
    def dim(self) -> int:
        return len(self.n)


@dataclass(frozen=True)
class VerifyReport:
    factorization: bool
    det_U_constant: bool
    W_integral: bool
    det_W_unit: bool
    degree_identity: bool
    n_sorted: bool

    @property
    def all(self) -> bool:
        return all(asdict(self).values())

    def failed(self) -> list:
        return [k for k, v in asdict(self).items() if not v]

    def to_json(self) -> dict:
        out = asdict(self)
        out["all"] = self.all
        return out


def diag_pi_powers(field, n):
    d = len(n)
    zero = Laurent.zero(field)
    return [[Laurent.monomial(field, -n[i]) if i == j else zero for j in range(d)] for i in range(d)]


def split(M, field: Field | None = None, weights=None, *, tie_break: int | None = None,
          verify: bool = True) -> Splitting:
    L = M if isinstance(M, Lattice) else Lattice(M, weights, field)
    S = smb(L, tie_break=tie_break)
    n = list(S.gauges)
    W = [[x.shift(n[j]) for j, x in enumerate(row)] for row in S.omegas]
    result = Splitting(
        n=n, W=W, D=diag_pi_powers(L.field, n), U=S.U_inv,
        shift=0, field=L.field, weights=L.weights, smb=S,
    )
    if verify:
        _verify_or_raise(L.matrix(), result)
    return result


def common_denominator(M) -> Poly:
    f = None
    for row in M:
        for x in row:
            den = to_ratfun(x).den
            f = den if f is None else poly_lcm(f, den)
    return f


def split_rational(M, field: Field | None = None, weights=None, *, tie_break: int | None = None,
                   verify: bool = True) -> Splitting:
    """Split a gluing matrix with entries in k(T) by clearing denominators first.

    Scaling the lattice by the common denominator ``f`` lowers every gauge by
    ``deg f``; the shift is undone in ``n`` and the unit ``T**deg f / f`` is
    absorbed into ``W`` (which then has rational entries unless ``f`` is a
    power of T).
    """
    d = check_square(M)
    if field is None:
        field = _infer_field(M)
    R = [[to_ratfun(x) for x in row] for row in M]
    f = common_denominator(R)
    k = f.degree
    cleared = [[Laurent.from_poly(x.num * (f // x.den)) for x in row] for row in R]
    inner = split(cleared, field, weights, tie_break=tie_break, verify=False)
    n = [x + k for x in inner.n]
    if f.coeffs == Poly.monomial(field, k).coeffs:
        W = inner.W
    else:
        unit = RatFun(Poly.monomial(field, k), f)
        W = [[unit * x for x in row] for row in inner.W]
    result = Splitting(
        n=n, W=W, D=diag_pi_powers(field, n), U=inner.U,
        shift=k, field=field, weights=inner.weights, smb=inner.smb,
    )
    if verify:
        _verify_or_raise(M, result)
    return result


def verify_splitting(M, S: Splitting) -> VerifyReport:
    """Re-check every clause of the certificate by exact arithmetic."""
    d = check_square(M)
    if len(S.n) != d or len(S.W) != d or len(S.U) != d:
        raise DimensionMismatch(f"splitting of dimension {len(S.n)} for a {d}x{d} matrix")
    w = check_weights(S.weights, d)
    field = S.field
    D = diag_pi_powers(field, S.n)

    try:
        product = mat_mul(mat_mul(S.W, D), S.U)
        factorization = mat_equal(product, M) and mat_equal(S.D, D)
    except (TypeError, ValueError):
        factorization = False

    U_poly = [[p if isinstance(p, Poly) else _as_poly(p) for p in row] for row in S.U]
    if any(p is None for row in U_poly for p in row):
        det_U_constant = False
    else:
        det_u = det(U_poly)
        det_U_constant = not det_u.is_zero() and det_u.degree == 0

    W_integral = all(x.val() + w[i] >= 0 for i, row in enumerate(S.W) for x in row)
    det_w = det(S.W)
    det_W_unit = (not det_w.is_zero()) and det_w.val() == -sum(w)

    det_m = det([list(r) for r in M])
    degree_identity = (not det_m.is_zero()) and sum(S.n) == det_m.val() + sum(w)
    n_sorted = all(a >= b for a, b in zip(S.n, S.n[1:]))
    return VerifyReport(factorization, det_U_constant, W_integral, det_W_unit,
                        degree_identity, n_sorted)


def _as_poly(x):
    try:
        lx = as_laurent(x)
        return lx.to_poly()
    except (TypeError, ValueError):
        return None


def _verify_or_raise(M, S):
    report = verify_splitting(M, S)
    if not report.all:
        raise VerificationError(f"certificate failed checks: {report.failed()}", report)
