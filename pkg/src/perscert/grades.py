"""Exact grades in R^m with the product order, plus the integer reindexings
used by discretization and zig-zag rectification.

All scalars are exact rationals (``fractions.Fraction``); no floats anywhere
in the core.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DimensionError, InvalidScaleError

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce ints, strings like "3/2", and Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_to_str(value: Fraction) -> str:
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Grade:
    """An exact point of R^m. Immutable, with structural equality."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        coords = tuple(rat(c) for c in coords)
        if not coords:
            raise DimensionError("a grade needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def m(self) -> int:
        return len(self.coords)

    def _check_arity(self, other: "Grade") -> None:
        if self.m != other.m:
            raise DimensionError(f"arity mismatch: {self.m} vs {other.m}")

    def leq(self, other: "Grade") -> bool:
        self._check_arity(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def __le__(self, other: "Grade") -> bool:
        return self.leq(other)

    def __ge__(self, other: "Grade") -> bool:
        return other.leq(self)

    def add(self, other: "Grade") -> "Grade":
        self._check_arity(other)
        return Grade(a + b for a, b in zip(self.coords, other.coords))

    def sub(self, other: "Grade") -> "Grade":
        self._check_arity(other)
        return Grade(a - b for a, b in zip(self.coords, other.coords))

    def __add__(self, other: "Grade") -> "Grade":
        return self.add(other)

    def __sub__(self, other: "Grade") -> "Grade":
        return self.sub(other)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __repr__(self) -> str:
        return "Grade(" + ", ".join(rat_to_str(c) for c in self.coords) + ")"


def grade(*coords) -> Grade:
    return Grade(coords)


def zero_grade(m: int) -> Grade:
    return Grade([Fraction(0)] * m)


def leq(a: Grade, b: Grade) -> bool:
    return a.leq(b)


def add(a: Grade, b: Grade) -> Grade:
    return a.add(b)


def sub(a: Grade, b: Grade) -> Grade:
    return a.sub(b)


def scale(r: Grade, c) -> Grade:
    """Multiply a 1-dimensional grade by a positive rational."""
    c = rat(c)
    if c <= 0:
        raise InvalidScaleError(f"scale factor must be positive, got {rat_to_str(c)}")
    return Grade(x * c for x in r.coords)


def floor_int(r) -> int:
    """Largest integer <= r."""
    return math.floor(rat(r))


def even_reindex(n: int, m: int = 1) -> int:
    """Block version of the even-floor reindexing: maps n to the largest
    multiple of m whose block index is even, no larger than n."""
    if m < 1:
        raise InvalidScaleError("block size must be >= 1")
    q = n // m
    e = q if q % 2 == 0 else q - 1
    return e * m


def odd_reindex(n: int, m: int = 1) -> int:
    """Block version of the odd-floor reindexing."""
    if m < 1:
        raise InvalidScaleError("block size must be >= 1")
    q = n // m
    o = q if q % 2 == 1 else q - 1
    return o * m
