"""
Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

``CScalar`` models Q(i). It mixes freely with ``int`` and ``Fraction`` so the
same quaternion table serves B and B (x) Q(i).
"""
import re
from fractions import Fraction
from typing import Union

from src.errors import InvalidInputError


class CScalar:
    """Element re + im*I of Q(i); immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("CScalar is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, CScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CScalar(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CScalar(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CScalar(self.re * other, self.im * other)
        if isinstance(other, CScalar):
            return CScalar(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CScalar(self.re * other, self.im * other)
        return NotImplemented

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("CScalar division by zero")
        return CScalar((self.re * o.re + self.im * o.im) / den,
                       (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return CScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return CScalar(1) / (self ** (-n))
        result = CScalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "CScalar":
        return CScalar(self.re, -self.im)

    def __repr__(self):
        return f"CScalar({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, CScalar]

I = CScalar(0, 1)


def sigma(x: Scalar) -> Scalar:
    """Complex conjugation; the identity on rationals."""
    if isinstance(x, CScalar):
        return x.conjugate()
    return x


def is_real(x: Scalar) -> bool:
    return not isinstance(x, CScalar) or x.im == 0


def real_part(x: Scalar) -> Fraction:
    if isinstance(x, CScalar):
        return x.re
    return Fraction(x)


_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_GAUSSIAN = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-]\s*\d+(?:/\d+)?)\s*\*\s*I\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``."""
    match = _RATIONAL.match(str(text))
    if not match:
        raise InvalidInputError(f"Malformed rational: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise InvalidInputError(f"Zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> Scalar:
    """Parse a rational or a Gaussian rational written ``re+im*I``."""
    match = _GAUSSIAN.match(str(text))
    if match:
        return CScalar(parse_rational(match.group(1)),
                       parse_rational(match.group(2).replace(" ", "")))
    return parse_rational(text)


def format_rational(x) -> str:
    return str(Fraction(x))


def format_scalar(x: Scalar) -> str:
    if isinstance(x, CScalar):
        if x.im == 0:
            return format_rational(x.re)
        sign = "-" if x.im < 0 else "+"
        return f"{format_rational(x.re)}{sign}{format_rational(abs(x.im))}*I"
    return format_rational(x)
