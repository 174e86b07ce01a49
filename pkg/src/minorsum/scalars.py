"""Exact scalar arithmetic: rationals and Gaussian rationals.

Real quantities (minors, minor sums, characteristic polynomial
coefficients) are carried by `fractions.Fraction`, which already keeps
values in lowest terms with a positive denominator.  Matrix entries are
`GaussianRational` values: complex numbers whose real and imaginary
parts are Fractions, closed under the field operations and under
conjugation, with exact equality.

Scalar text syntax, shared by matrix files, the command line and JSON
output: an integer ``3``, a rational ``-1/2``, or a complex token of
the form ``a+bi`` / ``a-bi`` with rational parts, e.g. ``1/2+3/4i``,
``-2i``, ``3``.  A token never contains whitespace.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ScalarParseError

__all__ = [
    "GaussianRational",
    "ZERO",
    "ONE",
    "I",
    "gaussian",
    "sign",
    "parse_rational",
    "parse_scalar",
    "format_rational",
    "format_scalar",
]


def sign(value: Fraction | int) -> int:
    """Exact sign of a rational: -1, 0 or +1."""
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with rational real and imaginary parts.

    Immutable and hashable.  Arithmetic accepts ints and Fractions on
    either side and is always exact; division by zero raises
    ZeroDivisionError.  Equality is strict: a GaussianRational never
    compares equal to a bare int or Fraction, use `is_zero` /
    `as_rational` for mixed checks.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def as_rational(self) -> Fraction:
        """The value as a Fraction; fails if the imaginary part is nonzero."""
        if self.im:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return self.re

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        d = self.abs_squared()
        if not d:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / d, -self.im / d)

    def __add__(self, other: object) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other: object) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = other.abs_squared()
        if not d:
            raise ZeroDivisionError("division by zero")
        num = self * other.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other: object) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return format_scalar(self)


def _coerce(value: object) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value))
    return None


def gaussian(value: object) -> GaussianRational:
    """Coerce an int, Fraction or GaussianRational to a GaussianRational."""
    coerced = _coerce(value)
    if coerced is None:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return coerced


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


_RATIONAL = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``3`` or ``-1/2``.  Rejects whitespace and empty strings."""
    if not _RATIONAL.match(text):
        raise ScalarParseError(f"invalid rational literal {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_scalar(token: str) -> GaussianRational:
    """Parse one scalar token: rational, pure imaginary, or ``a+bi``."""
    if token.endswith("i"):
        body = token[:-1]
        # the imaginary coefficient starts at the last sign that is not
        # the leading sign of the real part
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            real_text, imag_text = "", body
        else:
            real_text, imag_text = body[:cut], body[cut:]
        real = parse_rational(real_text) if real_text else Fraction(0)
        if imag_text in ("", "+"):
            imag = Fraction(1)
        elif imag_text == "-":
            imag = Fraction(-1)
        else:
            imag = parse_rational(imag_text)
        return GaussianRational(real, imag)
    return GaussianRational(parse_rational(token))


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(z: GaussianRational) -> str:
    """Token form that `parse_scalar` reads back to the same value."""
    if not z.im:
        return format_rational(z.re)
    mag = abs(z.im)
    mag_text = "i" if mag == 1 else format_rational(mag) + "i"
    if not z.re:
        return ("-" if z.im < 0 else "") + mag_text
    return format_rational(z.re) + ("-" if z.im < 0 else "+") + mag_text
