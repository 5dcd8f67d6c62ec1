"""
Scalars Module

Exact scalars over Q and Q(i). Rationals are ``fractions.Fraction``; Gaussian
rationals pair two of them. Both serialize as strings of the form ``"a/b"`` and
``"a/b+c/d*i"``.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Union

from mhskit.errors import InputError

Rational = Fraction

ScalarLike = Union[int, Fraction, "GaussianRational", complex, float, str]


def to_fraction(value: Any) -> Fraction:
    """Convert an int, Fraction, float (exactly, as a dyadic rational) or string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"Invalid rational {value!r}: {e}")
    if isinstance(value, GaussianRational):
        if value.im != 0:
            raise ValueError(f"{value} is not real")
        return value.re
    raise TypeError(f"Cannot convert {type(value).__name__} to a rational")


class GaussianRational:
    """
    An element re + im*i of Q(i) with exact rational parts.

    Instances are immutable and hash like their real part when real, so that
    ``GaussianRational(3) == 3`` and both hash alike.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: Any = 0, im: Any = 0):
        self._re = to_fraction(re)
        self._im = to_fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def of(cls, value: ScalarLike) -> "GaussianRational":
        """Coerce a scalar (int, Fraction, complex, float, string) to a GaussianRational."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, str):
            return parse_scalar(value)
        return cls(value, 0)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """The squared absolute value re^2 + im^2."""
        return self._re * self._re + self._im * self._im

    def is_real(self) -> bool:
        return self._im == 0

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_integer(self) -> bool:
        return self._im == 0 and self._re.denominator == 1

    def __add__(self, other: Any) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: Any) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: Any) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(
            self._re * other._re - self._im * other._im,
            self._re * other._im + self._im * other._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        denominator = other.norm()
        if denominator == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        numerator = self * other.conjugate()
        return GaussianRational(numerator._re / denominator, numerator._im / denominator)

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: Any) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._re == other._re and self._im == other._im

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __complex__(self) -> complex:
        return complex(float(self._re), float(self._im))

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        return format_scalar(self)


def _coerce(value: Any):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value, 0)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def format_scalar(value: ScalarLike) -> str:
    """
    Serialize a scalar as ``"a/b"`` (real) or ``"a/b+c/d*i"``.

    Fractions are reduced, integers carry no denominator, there are no spaces
    and the imaginary unit is a lowercase ``i``.
    """
    value = GaussianRational.of(value)
    if value.im == 0:
        return str(value.re)
    sign = "+" if value.im > 0 else "-"
    return f"{value.re}{sign}{abs(value.im)}*i"


def parse_scalar(text: str) -> GaussianRational:
    """
    Parse ``"a/b"``, ``"a/b+c/d*i"``, ``"c/d*i"`` or ``"i"`` into a GaussianRational.

    Raises:
        InputError: For malformed text or a zero denominator
    """
    if not isinstance(text, str):
        raise InputError(f"Scalar must be a string, got {type(text).__name__}")
    body = text.strip()
    if not body:
        raise InputError("Empty scalar")
    if not body.endswith("i"):
        return GaussianRational(_parse_rational(body, text), 0)

    body = body[:-1]
    if body.endswith("*"):
        body = body[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    # a sign right after a '/' or at position 0 belongs to the imaginary coefficient
    if split > 0:
        real_text, imag_text = body[:split], body[split:]
    else:
        real_text, imag_text = "", body
    if imag_text in ("", "+", "-"):
        imag_text += "1"
    real = _parse_rational(real_text, text) if real_text else Fraction(0)
    return GaussianRational(real, _parse_rational(imag_text, text))


def _parse_rational(body: str, original: str) -> Fraction:
    try:
        return Fraction(body)
    except ZeroDivisionError:
        raise InputError(f"Zero denominator in scalar {original!r}")
    except ValueError:
        raise InputError(f"Malformed scalar {original!r}")
