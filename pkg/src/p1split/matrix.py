"""Small dense-matrix helpers over the commutative rings of the package.

Matrices are lists of rows.  Entries may be :class:`Poly`, :class:`Laurent`
or :class:`RatFun`; mixed products coerce upward (Poly -> Laurent -> RatFun).
Dimensions are tiny (d <= ~6), so determinants use Laplace expansion
memoized over column subsets rather than anything division-based.
"""

from __future__ import annotations

from .exceptions import DimensionMismatch, SingularMatrix
from .laurent import Laurent
from .polyring import Poly, RatFun, poly_divmod, poly_lcm


def shape(M):
    return len(M), (len(M[0]) if M else 0)


def check_square(M) -> int:
    d = len(M)
    if d == 0 or any(len(row) != d for row in M):
        raise DimensionMismatch("expected a non-empty square matrix")
    return d


def column(M, j):
    return [row[j] for row in M]


def from_columns(cols):
    return [list(r) for r in zip(*cols)]


def transpose(M):
    return [list(r) for r in zip(*M)]


def identity(d, zero, one):
    return [[one if i == j else zero for j in range(d)] for i in range(d)]


def mat_mul(A, B):
    n, m = shape(A)
    m2, p = shape(B)
    if m != m2:
        raise DimensionMismatch(f"cannot multiply {n}x{m} by {m2}x{p}")
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(p):
            acc = Ai[0] * B[0][j]
            for k in range(1, m):
                a = Ai[k]
                if a:
                    b = B[k][j]
                    if b:
                        acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def mat_equal(A, B) -> bool:
    if shape(A) != shape(B):
        return False
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def det(M):
    """Determinant by Laplace expansion memoized on column subsets."""
    d = check_square(M)
    zero = M[0][0] * 0
    # minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    minors = {0: zero + 1}
    for k in range(d):
        new = {}
        row = M[k]
        for mask, sub in minors.items():
            if not sub:
                continue
            for j in range(d):
                bit = 1 << j
                if mask & bit or not row[j]:
                    continue
                # sign = (-1)^(number of chosen columns to the right of j)
                sign = bin(mask >> (j + 1)).count("1") & 1
                term = row[j] * sub
                key = mask | bit
                if sign:
                    term = -term
                new[key] = new[key] + term if key in new else term
        minors = new
    return minors.get((1 << d) - 1, zero)


def to_ratfun(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun.from_poly(x)
    if isinstance(x, Laurent):
        return RatFun.from_laurent(x)
    raise TypeError(f"cannot convert {x!r} to a rational function")


def solve(A, b):
    """Solve ``A x = b`` exactly over k(T); returns a list of :class:`RatFun`.

    Rows are cleared of denominators and the system is solved by Cramer's rule
    over k[T], which avoids the coefficient growth of elimination over Q(T).
    """
    d = check_square(A)
    if len(b) != d:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {d}")
    rows = []
    for i in range(d):
        r = [to_ratfun(x) for x in A[i]] + [to_ratfun(b[i])]
        f = r[0].den
        for x in r[1:]:
            f = poly_lcm(f, x.den)
        rows.append([x.num * poly_divmod(f, x.den)[0] for x in r])
    P = [row[:d] for row in rows]
    D = det(P)
    if not D:
        raise SingularMatrix("linear system is singular")
    out = []
    for j in range(d):
        Pj = [row[:j] + [row[d]] + row[j + 1:d] for row in rows]
        out.append(RatFun(det(Pj), D))
    return out
