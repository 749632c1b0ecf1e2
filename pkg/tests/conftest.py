import random

import pytest

from p1split import Laurent, Lattice, Poly, PrimeField, QQ, RatFun, SingularMatrix

F2, F3, F5, F7 = PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)
FIELDS = [F2, F3, F7, QQ]

ACCEPTANCE_LINES = []


def T(e, field=F2, c=1):
    return Laurent.monomial(field, e, c)


def laurent(field, terms):
    """Laurent polynomial from a ``{exponent: coefficient}`` dict."""
    return Laurent.from_dict(field, terms)


def random_laurent(field, rng, lo=-3, hi=3, density=0.6):
    terms = {e: field.random_element(rng, nonzero=True) for e in range(lo, hi + 1) if rng.random() < density}
    return Laurent.from_dict(field, terms)


def random_poly(field, rng, max_deg=3):
    return Poly(field, [field.random_element(rng) for _ in range(rng.randint(0, max_deg) + 1)])


def random_ratfun(field, rng, max_deg=2):
    while True:
        den = random_poly(field, rng, max_deg)
        if den:
            return RatFun(random_poly(field, rng, max_deg), den)


def random_lattice(field, d, rng, lo=-3, hi=3, weights=None):
    while True:
        M = [[random_laurent(field, rng, lo, hi) for _ in range(d)] for _ in range(d)]
        try:
            return Lattice(M, weights, field)
        except SingularMatrix:
            continue


def random_combination(L, rng, max_deg=2):
    """A random lattice vector together with its polynomial coefficient vector."""
    a = [random_poly(L.field, rng, max_deg) for _ in range(L.dim)]
    return L.vector(a), a


@pytest.fixture
def rng():
    return random.Random(20260101)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
