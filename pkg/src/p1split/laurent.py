"""Laurent polynomials in T: the finite elements of K_inf = k((1/T)).

Norms on K_inf^d are never evaluated as real numbers.  A vector norm
``||v|| = max_i |v_i| * ||e_i||`` is represented by its *gauge*
``min_i (val(v_i) + w_i)``, an integer (or ``+inf`` for the zero vector).
Because the absolute value is ``sigma ** val`` with ``0 < sigma < 1``, a
larger norm corresponds to a smaller gauge.
"""

from __future__ import annotations

from typing import Sequence

from .exceptions import DimensionMismatch, FieldMismatch
from .polyring import INF, Poly, RatFun, _add, _mul, _sub, format_terms, poly_divmod
from .scalar import Field, Scalar


class Laurent:
    """Immutable Laurent polynomial ``sum_i coeffs[i] * T**(low + i)``."""

    __slots__ = ("field", "low", "coeffs")

    def __init__(self, field: Field, low: int = 0, coeffs: Sequence = (), *, _canonical=False):
        self.field = field
        if _canonical:
            self.low, self.coeffs = low, tuple(coeffs)
            return
        c = [field.coerce(x) for x in coeffs]
        self.low, self.coeffs = _canon(field, low, c)

    @classmethod
    def _make(cls, field, low, coeffs):
        low, coeffs = _canon(field, low, coeffs)
        return cls(field, low, coeffs, _canonical=True)

    @classmethod
    def zero(cls, field):
        return cls(field, 0, (), _canonical=True)

    @classmethod
    def one(cls, field):
        return cls(field, 0, (field.one,), _canonical=True)

    @classmethod
    def monomial(cls, field, e: int, c=None):
        c = field.one if c is None else field.coerce(c)
        if field.is_zero(c):
            return cls.zero(field)
        return cls(field, e, (c,), _canonical=True)

    @classmethod
    def from_poly(cls, p: Poly) -> "Laurent":
        return cls._make(p.field, 0, p.coeffs)

    @classmethod
    def from_dict(cls, field, terms: dict) -> "Laurent":
        if not terms:
            return cls.zero(field)
        lo, hi = min(terms), max(terms)
        c = [field.zero] * (hi - lo + 1)
        for e, v in terms.items():
            c[e - lo] = field.coerce(v)
        return cls._make(field, lo, c)

    # --- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def high(self):
        """Largest exponent present (``-inf`` for zero)."""
        return self.low + len(self.coeffs) - 1 if self.coeffs else -INF

    def val(self):
        return -(self.low + len(self.coeffs) - 1) if self.coeffs else INF

    def coeff(self, e: int):
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    @property
    def leading(self):
        """Coefficient at the top exponent, i.e. the one realizing ``val``."""
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def in_O_inf(self) -> bool:
        """Power series in 1/T: every exponent <= 0."""
        return self.val() >= 0

    def in_m_inf(self) -> bool:
        return self.val() >= 1

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.low >= 0

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} has negative exponents")
        if not self.coeffs:
            return Poly.zero(self.field)
        return Poly(self.field, (self.field.zero,) * self.low + self.coeffs, _canonical=True)

    def shift(self, e: int) -> "Laurent":
        """Multiply by ``T**e``."""
        if not self.coeffs or e == 0:
            return self
        return Laurent(self.field, self.low + e, self.coeffs, _canonical=True)

    def scale(self, c) -> "Laurent":
        f = self.field
        c = f.coerce(c)
        if f.is_zero(c):
            return Laurent.zero(f)
        return Laurent(f, self.low, tuple(f.mul(c, x) for x in self.coeffs), _canonical=True)

    # --- arithmetic ----------------------------------------------------
    def _other(self, other):
        if isinstance(other, Laurent):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return Laurent.from_poly(other)
        if isinstance(other, (int, Scalar)) or type(other).__name__ == "Fraction":
            return Laurent._make(self.field, 0, [self.field.coerce(other)])
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        a, b = (self, o) if self.low <= o.low else (o, self)
        pad = [self.field.zero] * (b.low - a.low)
        return Laurent._make(self.field, a.low, _add(self.field, a.coeffs, pad + list(b.coeffs)))

    __radd__ = __add__

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

    def __neg__(self):
        f = self.field
        return Laurent(f, self.low, tuple(f.neg(c) for c in self.coeffs), _canonical=True)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Laurent.zero(self.field)
        return Laurent._make(self.field, self.low + o.low, _mul(self.field, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials are invertible Laurent polynomials")
            c = self.field.inv(self.coeffs[0])
            return Laurent.monomial(self.field, self.low * n, self.field.reduce(c ** (-n)))
        out = Laurent.one(self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.field == other.field and self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (Poly, int)):
            return self == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash(("Laurent", self.field, self.low, self.coeffs))

    def __repr__(self):
        return f"Laurent({format_terms(self.field, self.low, self.coeffs)})"

    def __str__(self):
        return format_terms(self.field, self.low, self.coeffs)

    def to_json(self):
        return {"low": self.low, "coeffs": [self.field.element_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field, obj):
        if not isinstance(obj, dict) or not isinstance(obj.get("coeffs"), list):
            raise ValueError("Laurent polynomial must be an object with a 'coeffs' list")
        low = obj.get("low", 0)
        if isinstance(low, bool) or not isinstance(low, int):
            raise ValueError(f"'low' must be an integer, got {low!r}")
        return cls._make(field, low, [field.element_from_json(c) for c in obj["coeffs"]])


def _canon(field, low, coeffs):
    c = list(coeffs)
    while c and field.is_zero(c[-1]):
        c.pop()
    start = 0
    while start < len(c) and field.is_zero(c[start]):
        start += 1
    if start == len(c):
        return 0, ()
    return low + start, tuple(c[start:])


def as_laurent(x, field=None) -> Laurent:
    if isinstance(x, Laurent):
        return x
    if isinstance(x, Poly):
        return Laurent.from_poly(x)
    if isinstance(x, RatFun):
        if x.den.degree == 0:
            return Laurent.from_poly(x.num.scale(x.field.inv(x.den.lc)))
        if x.den.coeffs == (x.field.zero,) * x.den.degree + (x.field.one,):
            return Laurent._make(x.field, -x.den.degree, x.num.coeffs)
        raise ValueError(f"{x!r} is not a Laurent polynomial")
    if field is not None:
        return Laurent._make(field, 0, [field.coerce(x)])
    raise TypeError(f"cannot convert {x!r} to a Laurent polynomial")


def decompose(lam):
    """Split ``lam`` into its polynomial part and a part vanishing at infinity.

    Returns ``(poly_part, vanishing_part)`` with ``poly_part`` in k[T] and
    ``vanishing_part`` of valuation >= 1 (or zero).  Rational functions are
    split by Euclidean division of the numerator by the denominator.
    """
    if isinstance(lam, Poly):
        return lam, Laurent.zero(lam.field)
    if isinstance(lam, RatFun):
        q, r = poly_divmod(lam.num, lam.den)
        return q, RatFun(r, lam.den)
    f = lam.field
    if not lam.coeffs:
        return Poly.zero(f), lam
    split = -lam.low
    if split <= 0:
        return lam.to_poly(), Laurent.zero(f)
    poly = Poly._make(f, lam.coeffs[split:])
    rest = Laurent._make(f, lam.low, lam.coeffs[:split])
    return poly, rest


def check_weights(w, d: int) -> tuple:
    if w is None:
        return (0,) * d
    w = tuple(w)
    if len(w) != d:
        raise DimensionMismatch(f"weights have length {len(w)}, expected {d}")
    for x in w:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"weights must be integers, got {x!r}")
    return w


def vector_gauge(v: Sequence, w: Sequence[int] | None = None):
    """Integer gauge ``min_i (val(v_i) + w_i)`` of the weighted max-norm; ``+inf`` iff ``v = 0``."""
    w = check_weights(w, len(v))
    return min((x.val() + wi for x, wi in zip(v, w)), default=INF)


def is_in_unit_ball(v: Sequence, w: Sequence[int] | None = None) -> bool:
    return vector_gauge(v, w) >= 0
