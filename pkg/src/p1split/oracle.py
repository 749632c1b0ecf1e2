"""Brute-force successive minima over a small prime field.

Every lattice vector ``sum_j a_j * basis[:, j]`` with ``deg a_j <= B`` is
enumerated; its gauge is computed from its coefficients on a common exponent
window.  The i-th minimum is then found the literal way: walk the vectors by
gauge (best first) and greedily keep those that are linearly independent over
k(T) from the ones already kept.

Independence from the kept vectors ``a_1..a_r`` is a k-linear condition on
the enumerated coefficient vector (all (r+1)-minors of ``[a_1..a_r | a]``
vanish), so the greedy scan is a vectorized matrix test rather than a
per-vector elimination.  None of this touches the reduction code in
:mod:`p1split.smb`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exceptions import EnumerationCapExceeded, UnsupportedField
from .matrix import det
from .polyring import Poly
from .scalar import PrimeField
from .smb import Lattice, SMBResult, smb

ENUMERATION_CAP_BITS = 24
_CHUNK = 1 << 17
_NO_GAUGE = np.iinfo(np.int32).max


@dataclass(frozen=True)
class OracleReport:
    minima: list
    bound: int
    enumerated: int
    stable: bool

    def to_json(self):
        return {"minima": list(self.minima), "bound": self.bound,
                "enumerated": self.enumerated, "stable": self.stable}


def _check_enumerable(L: Lattice, B: int):
    if not isinstance(L.field, PrimeField):
        raise UnsupportedField(f"the oracle needs a prime field, got {L.field}")
    if B < 0:
        raise ValueError("bound must be non-negative")
    bits = L.dim * (B + 1) * math.log2(L.field.p)
    if bits > ENUMERATION_CAP_BITS + 1e-9:
        raise EnumerationCapExceeded(
            f"{L.field.p}^{L.dim * (B + 1)} vectors exceeds the 2^{ENUMERATION_CAP_BITS} cap")


def _digits(codes, p, n):
    out = np.empty((len(codes), n), dtype=np.float64)
    x = codes.copy()
    for k in range(n):
        out[:, k] = x % p
        x //= p
    return out


def _window_matrix(L: Lattice, B: int):
    """Map from coefficient vectors (j, b) to vector coefficients (i, e), plus row scores."""
    d, p = L.dim, L.field.p
    rows, scores = [], []
    for i in range(d):
        entries = [x for x in L.basis[i] if x.coeffs]
        lo = min(x.low for x in entries)
        hi = max(x.high for x in entries) + B
        for e in range(lo, hi + 1):
            row = np.zeros(d * (B + 1))
            for j in range(d):
                x = L.basis[i][j]
                for b in range(B + 1):
                    row[j * (B + 1) + b] = int(x.coeff(e - b)) % p
            rows.append(row)
            scores.append(e - L.weights[i])
    return np.array(rows), np.array(scores, dtype=np.int64)


def _enumerate_gauges(L: Lattice, B: int) -> np.ndarray:
    """Gauge of every enumerated vector, indexed by its coefficient code (0 = zero vector)."""
    p, n = L.field.p, L.dim * (B + 1)
    G, scores = _window_matrix(L, B)
    order = np.argsort(-scores, kind="stable")
    G, scores = G[order], scores[order]
    # code = c_lo + p**n_lo * c_hi, so every vector is a sum of two precomputed halves
    n_lo = n // 2
    n_hi = n - n_lo
    P_lo, P_hi = p ** n_lo, p ** n_hi
    dtype = np.int8 if p < 64 else np.int64
    V_lo = np.mod(_digits(np.arange(P_lo, dtype=np.int64), p, n_lo) @ G[:, :n_lo].T, p)
    V_hi = np.mod(-(_digits(np.arange(P_hi, dtype=np.int64), p, n_hi) @ G[:, n_lo:].T), p)
    # a coordinate vanishes iff the low half equals the negated high half; the
    # trailing sentinel column never matches and marks the zero vector
    V_lo = np.hstack([V_lo, np.ones((P_lo, 1))]).astype(dtype)
    V_hi = np.hstack([V_hi, np.zeros((P_hi, 1))]).astype(dtype)
    neg_scores = np.append(-scores, _NO_GAUGE).astype(np.int32)
    gauges = np.empty(P_lo * P_hi, dtype=np.int32)
    step = max(1, _CHUNK // P_lo)
    for start in range(0, P_hi, step):
        nz = V_hi[start:start + step, None, :] != V_lo[None, :, :]
        g = neg_scores[nz.argmax(axis=2)]
        gauges[start * P_lo:(start + len(g)) * P_lo] = g.ravel()
    return gauges


def _code_to_polys(code: int, field, d: int, B: int):
    p = field.p
    digits = []
    for _ in range(d * (B + 1)):
        digits.append(code % p)
        code //= p
    return [Poly(field, digits[j * (B + 1):(j + 1) * (B + 1)]) for j in range(d)]


def _dependence_test(kept, field, d: int, B: int) -> np.ndarray:
    """Matrix H over F_p with ``H c == 0`` iff the vector coded by ``c`` lies in span(kept)."""
    n = d * (B + 1)
    r = len(kept)
    if r == 0:
        return np.eye(n)
    p = field.p
    blocks = []
    for R in combinations(range(d), r + 1):
        cof = {}
        for pos, t in enumerate(R):
            rest = [s for s in R if s != t]
            minor = det([[kept[k][s] for k in range(r)] for s in rest])
            sign = -1 if (pos + r) % 2 else 1
            cof[t] = (sign, minor)
        width = max((m.degree for _, m in cof.values() if m.coeffs), default=0) + B + 1
        H = np.zeros((width, n))
        for t, (sign, minor) in cof.items():
            for e, c in enumerate(minor.coeffs):
                for b in range(B + 1):
                    H[e + b, t * (B + 1) + b] = (sign * int(c)) % p
        blocks.append(H)
    return np.vstack(blocks)


def _greedy_minima(L: Lattice, B: int, gauges: np.ndarray) -> list:
    d, field = L.dim, L.field
    p, n = field.p, d * (B + 1)
    levels = sorted({int(g) for g in np.unique(gauges) if g != _NO_GAUGE}, reverse=True)
    kept, minima = [], []
    li = 0
    while len(kept) < d:
        HT = _dependence_test(kept, field, d, B).T.copy()
        found = None
        while found is None:
            if li == len(levels):
                raise RuntimeError("enumeration exhausted before reaching full rank")
            codes = np.flatnonzero(gauges == levels[li]).astype(np.int64)
            for start in range(0, len(codes), _CHUNK):
                chunk = codes[start:start + _CHUNK]
                hit = np.mod(_digits(chunk, p, n) @ HT, p).any(axis=1)
                if hit.any():
                    found = int(chunk[int(np.argmax(hit))])
                    break
            if found is None:
                li += 1
        kept.append(_code_to_polys(found, field, d, B))
        minima.append(levels[li])
    return minima


def _minima(L: Lattice, B: int):
    gauges = _enumerate_gauges(L, B)
    return _greedy_minima(L, B, gauges), len(gauges) - 1


def brute_minima(L: Lattice, B: int) -> OracleReport:
    """Successive minima (as gauges) of ``L`` over coefficients of degree <= ``B``.

    ``stable`` records whether bound ``B - 1`` gives the same answer.
    """
    _check_enumerable(L, B)
    minima, count = _minima(L, B)
    stable = B >= 1 and _minima(L, B - 1)[0] == minima
    return OracleReport(minima=minima, bound=B, enumerated=count, stable=stable)


def oracle_compare(L: Lattice, B: int, result: SMBResult | None = None) -> bool:
    if result is None:
        result = smb(L)
    report = brute_minima(L, B)
    return report.stable and list(result.gauges) == report.minima
