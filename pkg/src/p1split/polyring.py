"""Dense polynomials A = k[T] and rational functions K = k(T).

The valuation at infinity is ``val = -deg`` extended multiplicatively to K.
Degrees and valuations of zero are the sentinels ``-inf`` and ``+inf``
(``math.inf``); every other degree or valuation is a Python ``int``.
"""

from __future__ import annotations

import math
from typing import Sequence

from .exceptions import DivisionByZero, FieldMismatch
from .scalar import Field, Scalar

INF = math.inf


def _trim(field: Field, coeffs) -> tuple:
    c = list(coeffs)
    while c and field.is_zero(c[-1]):
        c.pop()
    return tuple(c)


def _add(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    red = field.reduce
    out = [red(x + y) for x, y in zip(a, b)]
    out.extend(a[len(b):])
    return out


def _sub(field, a, b):
    red = field.reduce
    n = max(len(a), len(b))
    a = list(a) + [field.zero] * (n - len(a))
    b = list(b) + [field.zero] * (n - len(b))
    return [red(x - y) for x, y in zip(a, b)]


def _mul(field, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    red = field.reduce
    return [red(x) for x in out]


class Poly:
    """Immutable dense polynomial; ``coeffs`` ascend by exponent, no trailing zero."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence = (), *, _canonical=False):
        self.field = field
        if _canonical:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = _trim(field, (field.coerce(c) for c in coeffs))

    @classmethod
    def _make(cls, field, coeffs):
        return cls(field, _trim(field, coeffs), _canonical=True)

    @classmethod
    def zero(cls, field):
        return cls(field, (), _canonical=True)

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,), _canonical=True)

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, e: int, c=None):
        if e < 0:
            raise ValueError("polynomials have no negative exponents")
        c = field.one if c is None else field.coerce(c)
        return cls._make(field, [field.zero] * e + [c])

    @classmethod
    def T(cls, field):
        return cls.monomial(field, 1)

    # --- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -INF

    def val(self):
        return 1 - len(self.coeffs) if self.coeffs else INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, e: int):
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return self.field.zero

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = self.field.inv(self.coeffs[-1])
        return Poly._make(self.field, [self.field.mul(c, inv) for c in self.coeffs])

    def shift(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("use a Laurent polynomial for negative shifts")
        if not self.coeffs or e == 0:
            return self
        return Poly(self.field, (self.field.zero,) * e + self.coeffs, _canonical=True)

    def scale(self, c) -> "Poly":
        f = self.field
        c = f.coerce(c)
        if f.is_zero(c):
            return Poly.zero(f)
        return Poly(f, tuple(f.mul(c, x) for x in self.coeffs), _canonical=True)

    # --- arithmetic ----------------------------------------------------
    def _other(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Scalar)) or type(other).__name__ == "Fraction":
            return Poly.constant(self.field, other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly._make(self.field, _add(self.field, self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly._make(self.field, _sub(self.field, self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        f = self.field
        return Poly(f, tuple(f.neg(c) for c in self.coeffs), _canonical=True)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly._make(self.field, _mul(self.field, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly.one(self.field)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly.constant(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({format_terms(self.field, 0, self.coeffs)})"

    def to_json(self):
        return {"coeffs": [self.field.element_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field, obj):
        if not isinstance(obj, dict) or not isinstance(obj.get("coeffs"), list):
            raise ValueError("polynomial must be an object with a 'coeffs' list")
        return cls._make(field, [field.element_from_json(c) for c in obj["coeffs"]])


def format_terms(field, low, coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if field.is_zero(c):
            continue
        e = low + i
        mono = "" if e == 0 else ("T" if e == 1 else f"T^{e}")
        if not mono:
            terms.append(str(c))
        elif c == field.one:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(reversed(terms)) or "0"


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    field = f.field
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return Poly.zero(field), f
    inv = field.inv(g.coeffs[-1])
    q = [field.zero] * (len(r) - dg)
    gc = g.coeffs
    for k in range(len(r) - 1 - dg, -1, -1):
        c = field.mul(r[k + dg], inv)
        q[k] = c
        if not field.is_zero(c):
            for j in range(dg + 1):
                r[k + j] = field.sub(r[k + j], field.mul(c, gc[j]))
    return Poly._make(field, q), Poly._make(field, r[:dg])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


class RatFun:
    """Reduced quotient ``num/den`` with ``den`` monic and ``gcd(num, den) = 1``."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, _canonical=False):
        if den is None:
            den = Poly.one(num.field)
        if num.field != den.field:
            raise FieldMismatch(f"{num.field} vs {den.field}")
        if _canonical:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly.one(num.field)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lc
        if lc != num.field.one:
            inv = num.field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.field), _canonical=True)

    @classmethod
    def from_laurent(cls, x) -> "RatFun":
        f = x.field
        if x.is_zero():
            return cls(Poly.zero(f), Poly.one(f), _canonical=True)
        num = Poly(f, x.coeffs, _canonical=True)
        if x.low >= 0:
            return cls(num.shift(x.low), Poly.one(f), _canonical=True)
        # coeffs[0] != 0, so num and T^-low are coprime
        return cls(num, Poly.monomial(f, -x.low), _canonical=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def val(self):
        if self.num.is_zero():
            return INF
        return self.den.degree - self.num.degree

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _other(self, other):
        if isinstance(other, RatFun):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, Poly):
            return RatFun.from_poly(other)
        if hasattr(other, "low") and hasattr(other, "coeffs"):
            return RatFun.from_laurent(other)
        if isinstance(other, (int, Scalar)) or type(other).__name__ == "Fraction":
            return RatFun.from_poly(Poly.constant(self.field, other))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._other(other) if not isinstance(other, RatFun) else other
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RatFun", self.num, self.den))

    def __repr__(self):
        return f"RatFun(({format_terms(self.field, 0, self.num.coeffs)}) / ({format_terms(self.field, 0, self.den.coeffs)}))"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, field, obj):
        if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
            raise ValueError("rational function must have 'num' and 'den'")
        return cls(Poly.from_json(field, obj["num"]), Poly.from_json(field, obj["den"]))


def val_inf(x):
    """Valuation at infinity: ``-deg`` for polynomials, ``deg den - deg num`` for K."""
    return x.val()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * (b // poly_gcd(a, b))).monic()
