"""Exact arithmetic in Q(i), the Gaussian rationals.

Weierstrass points and divisor points are stored with rational real and
imaginary parts so that pencil coefficients at complex points can be
evaluated without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union[int, Fraction, "QQi"]


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or "p/q" / decimal string exactly."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not exact; pass a 'p/q' string")
    raise TypeError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True, order=False)
class QQi:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @classmethod
    def parse(cls, value) -> "QQi":
        """Accept QQi, a rational, a string, or a mapping with "re"/"im"."""
        if isinstance(value, QQi):
            return value
        if isinstance(value, dict):
            unknown = set(value) - {"re", "im"}
            if unknown:
                raise ValueError(f"unexpected keys in complex number: {sorted(unknown)}")
            return cls(to_fraction(value.get("re", 0)), to_fraction(value.get("im", 0)))
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return cls(to_fraction(value[0]), to_fraction(value[1]))
        return cls(to_fraction(value))

    def _coerce(self, other) -> "QQi":
        if isinstance(other, QQi):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QQi(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QQi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QQi(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QQi(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    def inverse(self) -> "QQi":
        d = self.norm()
        if d == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return QQi(self.re / d, -self.im / d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = QQi(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self):
        return (self.re, self.im)

    def to_record(self) -> dict:
        return {"re": fraction_str(self.re), "im": fraction_str(self.im)}

    def __str__(self):
        if self.im == 0:
            return fraction_str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{fraction_str(self.re)}{sign}{fraction_str(abs(self.im))}i"

    def __repr__(self):
        return f"QQi({self})"


def fraction_str(x: Fraction) -> str:
    """Serialize a rational as "p/q" (or "p" when integral)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
