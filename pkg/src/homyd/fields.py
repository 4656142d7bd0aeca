"""Exact scalar arithmetic over the rationals or a prime field.

Rational scalars are plain Python ints or ``fractions.Fraction`` values
(arbitrary precision); prime-field scalars are machine ints kept reduced
into ``[0, p)``.  Every downstream verification is an equality check, so
no operation here is allowed to round.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import HomydError

# A scalar is an int or a Fraction; prime fields only ever hold ints.
Scalar = int | Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_RESIDUE_RE = re.compile(r"^\d+$")


class FieldValueError(HomydError, ValueError):
    """A scalar literal or value does not belong to the field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field of rational numbers."""

    descriptor = "rational"
    characteristic = 0
    zero = 0
    one = 1

    def normalize(self, value: Scalar) -> Scalar:
        if isinstance(value, bool):
            raise FieldValueError(f"not a rational scalar: {value!r}")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            return int(value) if value.denominator == 1 else value
        raise FieldValueError(f"not a rational scalar: {value!r}")

    def parse(self, text: str) -> Scalar:
        if not isinstance(text, str) or not _RATIONAL_RE.match(text):
            raise FieldValueError(
                f"not an exact rational literal (expect 'a' or 'a/b'): {text!r}"
            )
        return self.normalize(Fraction(text))

    def format(self, value: Scalar) -> str:
        return str(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.normalize(Fraction(1) / a)

    def reduce_array(self, arr):
        return arr

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """The field of integers modulo a prime ``p``; values stay reduced."""

    characteristic: int
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldValueError(f"modulus must be prime, got {p!r}")
        self.p = p
        self.characteristic = p

    @property
    def descriptor(self) -> str:
        return f"prime:{self.p}"

    def normalize(self, value: Scalar) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise FieldValueError(f"not a prime-field scalar: {value!r}")
        return value % self.p

    def parse(self, text: str) -> int:
        if not isinstance(text, str) or not _RESIDUE_RE.match(text):
            raise FieldValueError(f"not a residue literal: {text!r}")
        value = int(text)
        if value >= self.p:
            raise FieldValueError(
                f"non-reduced residue {value} (expected 0 <= value < {self.p})"
            )
        return value

    def format(self, value: int) -> str:
        return str(value)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def reduce_array(self, arr):
        return arr % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return f"PrimeField({self.p})"


RATIONALS = Rationals()

Field = Rationals | PrimeField


def field_from_descriptor(descriptor: str) -> Field:
    """Resolve ``"rational"`` or ``"prime:<p>"`` to a field object."""
    if descriptor == "rational":
        return RATIONALS
    if isinstance(descriptor, str) and descriptor.startswith("prime:"):
        tail = descriptor[len("prime:"):]
        if not tail.isdigit():
            raise FieldValueError(f"bad field descriptor: {descriptor!r}")
        return PrimeField(int(tail))
    raise FieldValueError(f"bad field descriptor: {descriptor!r}")
