"""Exact coefficient fields: the rationals and prime fields.

Scalars are plain values, not wrapper objects: `Fraction` over the
rationals (kept canonical by Fraction itself: lowest terms, positive
denominator) and `int` residues in [0, p) over a prime field.  A
FieldSpec supplies the arithmetic so that all linear-algebra code is
field generic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatchError, ParseError

Scalar = Union[Fraction, int]

RATIONAL_KIND = "Q"
PRIME_KIND = "Fp"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Tag for an exact field together with its scalar operations."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == RATIONAL_KIND:
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == PRIME_KIND:
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- basic constants ------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.kind == RATIONAL_KIND else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.kind == RATIONAL_KIND else 1

    # -- arithmetic -----------------------------------------------------

    def coerce(self, value) -> Scalar:
        """Canonical scalar from an int, Fraction, or another residue."""
        if self.kind == RATIONAL_KIND:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into the rationals")
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise TypeError(f"cannot coerce {value!r} into F_{self.p}")
            value = value.numerator
        if not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into F_{self.p}")
        return value % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.kind == RATIONAL_KIND else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.kind == RATIONAL_KIND else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.kind == RATIONAL_KIND else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.kind == RATIONAL_KIND else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise ZeroDivisionError("scalar inverse of zero")
        if self.kind == RATIONAL_KIND:
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    # -- text forms -----------------------------------------------------

    def parse(self, text: str) -> Scalar:
        """Parse the serialized form: "a/b" or "a" over Q, a residue over Fp."""
        if not isinstance(text, str):
            raise ParseError(f"scalar must be a string, got {text!r}")
        text = text.strip()
        if self.kind == RATIONAL_KIND:
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational scalar {text!r}") from exc
        try:
            value = int(text)
        except ValueError as exc:
            raise ParseError(f"bad F_{self.p} scalar {text!r}") from exc
        if not 0 <= value < self.p:
            raise ParseError(f"residue {value} out of range for F_{self.p}")
        return value

    def fmt(self, value: Scalar) -> str:
        return str(value)

    def require_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise FieldMismatchError(f"field mismatch: {self} vs {other}")

    def __str__(self) -> str:
        return "Q" if self.kind == RATIONAL_KIND else f"F{self.p}"


RATIONALS = FieldSpec(RATIONAL_KIND)


def prime_field(p: int) -> FieldSpec:
    """The field with p elements, p prime."""
    return FieldSpec(PRIME_KIND, p)
