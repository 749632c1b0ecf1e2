import random
from dataclasses import replace

import pytest

from p1split import (EnumerationCapExceeded, Laurent, Lattice, QQ, UnsupportedField, brute_minima,
                     oracle_compare, smb)
from p1split.oracle import ENUMERATION_CAP_BITS
from conftest import F2, F3, T, random_lattice

Z2 = Laurent.zero(F2)
SKEW = Lattice([[Z2, T(2)], [T(0), T(1)]])
IDENT = Lattice([[T(0), Z2], [Z2, T(0)]])


def test_identity_minima():
    rep = brute_minima(IDENT, 1)
    assert rep.minima == [0, 0]
    assert rep.enumerated == 2 ** 4 - 1
    assert oracle_compare(IDENT, 1)


def test_diagonal_minima():
    L = Lattice([[T(2), Z2], [Z2, T(-1)]])
    assert brute_minima(L, 2).minima == [1, -2]


def test_skew_minima_regression():
    rep = brute_minima(SKEW, 3)
    assert rep.minima == [0, -2] and rep.stable
    assert oracle_compare(SKEW, 3)


def test_unsupported_field():
    L = Lattice([[Laurent.one(QQ)]])
    with pytest.raises(UnsupportedField):
        brute_minima(L, 1)


def test_enumeration_cap():
    L = Lattice([[T(0, F3), Laurent.zero(F3)], [Laurent.zero(F3), T(0, F3)]])
    B = ENUMERATION_CAP_BITS  # 3**(2 * 25) is far above 2**24
    with pytest.raises(EnumerationCapExceeded):
        brute_minima(L, B)


def test_zero_bound_is_never_stable():
    rep = brute_minima(IDENT, 0)
    assert rep.minima == [0, 0] and not rep.stable


def test_corrupted_gauges_rejected():
    S = smb(SKEW)
    assert oracle_compare(SKEW, 3, S)
    assert not oracle_compare(SKEW, 3, replace(S, gauges=[0, -1]))
    assert not oracle_compare(SKEW, 3, replace(S, gauges=[-2, 0]))


def _small_cases(count, seed):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        field = (F2, F3)[k % 2]
        d = 1 + k % 3
        out.append(random_lattice(field, d, rng, lo=0, hi=2 if field is F3 and d == 3 else 3))
    return out


def test_enumeration_count_and_monotone_minima():
    for L in _small_cases(12, 1):
        B = 2
        rep = brute_minima(L, B)
        assert rep.enumerated == L.field.p ** (L.dim * (B + 1)) - 1
        assert len(rep.minima) == L.dim
        assert all(a >= b for a, b in zip(rep.minima, rep.minima[1:]))


def test_column_permutation_invariance():
    rng = random.Random(2)
    for L in _small_cases(12, 3):
        perm = list(range(L.dim))
        rng.shuffle(perm)
        L2 = Lattice([[row[j] for j in perm] for row in L.basis], L.weights, L.field)
        assert brute_minima(L2, 2).minima == brute_minima(L, 2).minima


def test_weighted_lattices_agree():
    rng = random.Random(5)
    for k in range(10):
        d = 1 + k % 2
        w = [rng.randint(-2, 2) for _ in range(d)]
        L = random_lattice(F2, d, rng, lo=-1, hi=2, weights=w)
        assert oracle_compare(L, 4)


def test_stable_bound_survives_one_more_degree():
    # the spot check at B + 1 on a sample of stable runs
    pool = _small_cases(60, 7)
    rng = random.Random(9)
    # 10% of the pool, stratified by dimension
    sample = [L for d in (1, 2, 3) for L in rng.sample([L for L in pool if L.dim == d], 2)]
    for L in sample:
        B = 3
        if L.field.p ** (L.dim * (B + 2)) > 1 << ENUMERATION_CAP_BITS:
            B = 2
        rep = brute_minima(L, B)
        if rep.stable:
            assert brute_minima(L, B + 1).minima == rep.minima
