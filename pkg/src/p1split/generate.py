"""Random instances with a known splitting type.

An instance starts as ``diag(T**a_1, ..., T**a_d)``, whose type is
``sorted(-a_i)``, and is then mixed by elementary operations that cannot
change the bundle: column operations from GL_d(k[T]) on the right and row
operations from GL_d(O_inf) on the left.
"""

from __future__ import annotations

import random

from .jsonio import Instance
from .laurent import Laurent
from .polyring import Poly
from .scalar import Field


def _monomial_poly(field, rng, max_deg):
    return Poly.monomial(field, rng.randint(0, max_deg), field.random_element(rng, nonzero=True))


def random_unimodular(field: Field, d: int, rng: random.Random, steps: int = 4, max_deg: int = 2):
    """Product of elementary polynomial matrices and a constant invertible diagonal."""
    zero, one = Poly.zero(field), Poly.one(field)
    U = [[one if i == j else zero for j in range(d)] for i in range(d)]
    for j in range(d):
        U[j][j] = U[j][j].scale(field.random_element(rng, nonzero=True))
    for _ in range(steps if d > 1 else 0):
        i, j = rng.sample(range(d), 2)
        a = _monomial_poly(field, rng, max_deg)
        for r in range(d):
            U[r][j] = U[r][j] + a * U[r][i]
    return U


def random_o_inf_unit(field: Field, d: int, rng: random.Random, steps: int = 4, max_depth: int = 2):
    """Product of elementary matrices over O_inf with off-diagonal valuation >= 1."""
    zero, one = Laurent.zero(field), Laurent.one(field)
    W = [[one if i == j else zero for j in range(d)] for i in range(d)]
    for i in range(d):
        W[i][i] = Laurent.monomial(field, 0, field.random_element(rng, nonzero=True))
    for _ in range(steps if d > 1 else 0):
        i, j = rng.sample(range(d), 2)
        a = Laurent.monomial(field, -rng.randint(1, max_depth), field.random_element(rng, nonzero=True))
        W[i] = [x + a * y for x, y in zip(W[i], W[j])]
    return W


def mix(M, field: Field, rng: random.Random, mixes: int, max_deg: int = 2):
    """Apply ``mixes`` random bundle-preserving elementary operations to a copy of ``M``."""
    M = [list(r) for r in M]
    d = len(M)
    for _ in range(mixes):
        c = field.random_element(rng, nonzero=True)
        right = rng.random() < 0.5
        if d == 1:
            # only unit scalings exist in rank one
            M[0][0] = M[0][0].scale(c)
            continue
        i, j = rng.sample(range(d), 2)
        if right:
            a = Laurent.monomial(field, rng.randint(0, max_deg), c)
            for r in range(d):
                M[r][j] = M[r][j] + a * M[r][i]
        else:
            a = Laurent.monomial(field, -rng.randint(0, max_deg), c)
            M[i] = [x + a * y for x, y in zip(M[i], M[j])]
    return M


def gen_instance(seed: int, dim: int, deg: int, field: Field, mixes: int) -> Instance:
    if dim < 1 or deg < 0 or mixes < 0:
        raise ValueError("need dim >= 1, deg >= 0 and mixes >= 0")
    rng = random.Random(seed)
    a = [rng.randint(-deg, deg) for _ in range(dim)]
    zero = Laurent.zero(field)
    M = [[Laurent.monomial(field, a[i]) if i == j else zero for j in range(dim)] for i in range(dim)]
    M = mix(M, field, rng, mixes)
    return Instance(
        field=field, dim=dim, matrix=M,
        expected=sorted((-x for x in a), reverse=True), seed=seed,
        extra={"generator": {"deg": deg, "dim": dim, "mixes": mixes}},
    )
