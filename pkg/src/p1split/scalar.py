"""Exact arithmetic in the base field k.

Two families are supported: prime fields F_p and the rationals Q.  Field
objects operate on *raw* values (``int`` residues for F_p, ``Fraction`` for
Q) so that polynomial code can run its inner loops on plain Python numbers;
:class:`Scalar` wraps a raw value together with its field for the public API.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .exceptions import DivisionByZero, FieldMismatch

Raw = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface of the base fields."""

    zero: Raw
    one: Raw
    size: int | None = None

    def reduce(self, x) -> Raw:
        raise NotImplementedError

    def add(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a + b)

    def sub(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a - b)

    def mul(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a * b)

    def neg(self, a: Raw) -> Raw:
        return self.reduce(-a)

    def inv(self, a: Raw) -> Raw:
        raise NotImplementedError

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Raw) -> bool:
        return a == 0

    def __call__(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))

    def coerce(self, x) -> Raw:
        raise NotImplementedError

    def random_element(self, rng: random.Random, nonzero: bool = False) -> Raw:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def element_to_json(self, a: Raw):
        raise NotImplementedError

    def element_from_json(self, obj) -> Raw:
        raise NotImplementedError


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p must be a prime integer, got {self.p!r}")

    zero = 0
    one = 1

    @property
    def size(self) -> int:
        return self.p

    def reduce(self, x) -> int:
        return x % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def coerce(self, x) -> int:
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} element used in {self}")
            return x.value
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into {self}")
        return x % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def random_element(self, rng, nonzero=False):
        return rng.randrange(1 if nonzero else 0, self.p)

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def element_to_json(self, a):
        return int(a)

    def element_from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise ValueError(f"F_{self.p} element must be an integer, got {obj!r}")
        return obj % self.p

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class Rationals(Field):
    zero = Fraction(0)
    one = Fraction(1)

    def reduce(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} element used in {self}")
            return x.value
        if isinstance(x, bool):
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return _parse_fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def random_element(self, rng, nonzero=False):
        # small numerators keep coefficient growth readable in tests
        while True:
            x = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2, 3)))
            if x or not nonzero:
                return x

    def to_json(self):
        return {"kind": "Q"}

    def element_to_json(self, a):
        a = Fraction(a)
        if a.denominator == 1:
            return a.numerator
        return f"{a.numerator}/{a.denominator}"

    def element_from_json(self, obj):
        if isinstance(obj, bool):
            raise ValueError(f"Q element must be an integer or 'num/den', got {obj!r}")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            return _parse_fraction(obj)
        raise ValueError(f"Q element must be an integer or 'num/den', got {obj!r}")

    def __str__(self):
        return "Q"


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def _parse_fraction(s: str) -> Fraction:
    m = _FRACTION_RE.match(s)
    if not m:
        raise ValueError(f"malformed rational {s!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise DivisionByZero(f"zero denominator in {s!r}")
    return Fraction(int(m.group(1)), den)


QQ = Rationals()


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"field must be an object with a 'kind' key, got {obj!r}")
    if obj["kind"] == "Q":
        return QQ
    if obj["kind"] == "Fp":
        p = obj.get("p")
        if isinstance(p, bool) or not isinstance(p, int):
            raise ValueError(f"field.p must be an integer, got {p!r}")
        return PrimeField(p)
    raise ValueError(f"unknown field kind {obj['kind']!r}")


def parse_field(text: str) -> Field:
    """Parse a command-line field name: ``Q``, ``F7``, ``Fp:7`` or ``7``."""
    t = text.strip()
    if t.upper() in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"(?:[Ff][Pp]?:?)?(\d+)", t)
    if not m:
        raise ValueError(f"unknown field {text!r}")
    return PrimeField(int(m.group(1)))


@dataclass(frozen=True)
class Scalar:
    """An immutable element of a base field."""

    field: Field
    value: Raw

    def _check(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._check(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._check(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._check(other)))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._check(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._check(other), self.value))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._check(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __repr__(self):
        return f"{self.field}({self.value})"


def scalar_arith(op: str, a: Scalar, b: Scalar, f: Field) -> Scalar:
    """Apply ``op`` (one of add, sub, mul, div) to two elements of ``f``."""
    if a.field != f or b.field != f:
        raise FieldMismatch(f"operands from {a.field} and {b.field}, expected {f}")
    ops = {"add": f.add, "sub": f.sub, "mul": f.mul, "div": f.div}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return Scalar(f, ops[op](a.value, b.value))
