"""Exact coefficient fields: rationals and prime fields of odd characteristic.

Every coefficient in this package is either a fractions.Fraction or an
FpElement.  Field descriptors (Rationals, PrimeField) carry the conversion
and parsing logic; arithmetic lives on the scalars themselves so the rest
of the code can stay duck-typed.  Characteristic 2 is rejected everywhere,
the algebra this package computes in needs 2 to be invertible.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["QQ", "Rationals", "PrimeField", "FpElement", "field_by_name"]


class Rationals:
    """Descriptor for the rational field (coefficients are Fraction)."""

    name = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        raise TypeError("cannot coerce %r into the rational field" % (value,))

    def from_ratio(self, num: int, den: int = 1):
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """One residue modulo an odd prime. Supports +-*/ with its own kind and ints."""

    __slots__ = ("p", "r")

    def __init__(self, p: int, r: int):
        self.p = p
        self.r = r % p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise TypeError("mixed prime fields: p=%d vs p=%d" % (self.p, other.p))
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FpElement(self.p, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.p, self.r + o.r)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.p, self.r - o.r)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.p, o.r - self.r)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.p, self.r * o.r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.r == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpElement(self.p, self.r * pow(o.r, -1, self.p))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return FpElement(self.p, -self.r)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.r == other.r
        if isinstance(other, int) and not isinstance(other, bool):
            return (self.r - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.r)

    def __bool__(self):
        return self.r != 0

    def __repr__(self):
        return "FpElement(%d, %d)" % (self.p, self.r)

    def __str__(self):
        return str(self.r)


class PrimeField:
    """Descriptor for GF(p), p an odd prime (p = 2 is rejected)."""

    characteristic: int

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError("field order must be a prime number, got %r" % (p,))
        if p == 2:
            raise ValueError("characteristic 2 is not supported (2 must be invertible)")
        self.p = p
        self.characteristic = p
        self.zero = FpElement(p, 0)
        self.one = FpElement(p, 1)

    @property
    def name(self) -> str:
        return "gf:%d" % self.p

    def coerce(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise TypeError("element of GF(%d) used in GF(%d)" % (value.p, self.p))
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return FpElement(self.p, value)
        if isinstance(value, Fraction):
            return self.from_ratio(value.numerator, value.denominator)
        raise TypeError("cannot coerce %r into GF(%d)" % (value, self.p))

    def from_ratio(self, num: int, den: int = 1):
        if den % self.p == 0:
            raise ZeroDivisionError("denominator %d vanishes in GF(%d)" % (den, self.p))
        return FpElement(self.p, num * pow(den % self.p, -1, self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


def field_by_name(name: str):
    """Parse a field tag: "rational" or "gf:p" with p an odd prime."""
    if name == "rational":
        return QQ
    if name.startswith("gf:"):
        body = name[3:]
        if not body.isdigit():
            raise ValueError("malformed field tag %r" % name)
        return PrimeField(int(body))
    raise ValueError("unknown field tag %r (expected 'rational' or 'gf:p')" % name)
