"""Exact arithmetic in the Boolean semifield B and the rational tropical semifield T.

Both are idempotent: addition is a join (logical or / max) and the natural
order is ``a <= b`` iff ``a + b == b``.  Tropical values carry exact
``Fraction`` payloads; the bottom element is the distinguished ``NEG_INF``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class SemifieldMismatch(TypeError):
    """Raised when values of different semifields are combined."""


class _NegInf:
    """Bottom element of T.  A singleton so that absorption is structural."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()

Payload = Union[bool, Fraction, _NegInf]


class Semifield(enum.Enum):
    BOOLEAN = "B"
    TROPICAL = "T"

    @property
    def zero(self) -> "SemifieldValue":
        return _ZERO[self]

    @property
    def one(self) -> "SemifieldValue":
        return _ONE[self]

    def __call__(self, x) -> "SemifieldValue":
        """Coerce a Python value: ints/bools for B; rationals, strings or ``NEG_INF`` for T."""
        if isinstance(x, SemifieldValue):
            if x.tag is not self:
                raise SemifieldMismatch(f"{x!r} is not in {self.value}")
            return x
        if self is Semifield.BOOLEAN:
            if x not in (0, 1):
                raise ValueError(f"Boolean payload must be 0 or 1, got {x!r}")
            return _ONE[self] if x else _ZERO[self]
        if x is NEG_INF or (isinstance(x, str) and x.strip() in ("-inf", "ninf")):
            return _ZERO[self]
        if isinstance(x, float):
            raise TypeError("tropical payloads are exact; pass a Fraction, int or str")
        return SemifieldValue(self, Fraction(x))

    @classmethod
    def parse(cls, name: str) -> "Semifield":
        key = name.strip().upper()
        for member in cls:
            if key in (member.value, member.name):
                return member
        raise ValueError(f"unknown semifield {name!r}; expected B or T")


@dataclass(frozen=True)
class SemifieldValue:
    tag: Semifield
    payload: Payload

    def _check(self, other: "SemifieldValue") -> None:
        if not isinstance(other, SemifieldValue):
            raise TypeError(f"expected a SemifieldValue, got {type(other).__name__}")
        if other.tag is not self.tag:
            raise SemifieldMismatch(f"cannot combine {self.tag.value} and {other.tag.value} values")

    @property
    def is_zero(self) -> bool:
        if self.tag is Semifield.BOOLEAN:
            return not self.payload
        return self.payload is NEG_INF

    @property
    def is_one(self) -> bool:
        if self.tag is Semifield.BOOLEAN:
            return bool(self.payload)
        return self.payload is not NEG_INF and self.payload == 0

    def __add__(self, other: "SemifieldValue") -> "SemifieldValue":
        self._check(other)
        if self.tag is Semifield.BOOLEAN:
            return self if self.payload else other
        if self.payload is NEG_INF:
            return other
        if other.payload is NEG_INF:
            return self
        return self if self.payload >= other.payload else other

    def __mul__(self, other: "SemifieldValue") -> "SemifieldValue":
        self._check(other)
        if self.tag is Semifield.BOOLEAN:
            return other if self.payload else self
        if self.payload is NEG_INF or other.payload is NEG_INF:
            return _ZERO[self.tag]
        return SemifieldValue(self.tag, self.payload + other.payload)

    def __pow__(self, n: int) -> "SemifieldValue":
        if n < 0:
            return inv(self) ** (-n)
        if n == 0:
            return _ONE[self.tag]
        if self.tag is Semifield.BOOLEAN or self.payload is NEG_INF:
            return self
        return SemifieldValue(self.tag, self.payload * n)

    def __le__(self, other: "SemifieldValue") -> bool:
        return natural_leq(self, other)

    def __lt__(self, other: "SemifieldValue") -> bool:
        return natural_leq(self, other) and self != other

    def __ge__(self, other: "SemifieldValue") -> bool:
        return natural_leq(other, self)

    def __gt__(self, other: "SemifieldValue") -> bool:
        return natural_leq(other, self) and self != other

    def __repr__(self) -> str:
        if self.tag is Semifield.BOOLEAN:
            return f"B({int(self.payload)})"
        return f"T({self})"

    def __str__(self) -> str:
        if self.tag is Semifield.BOOLEAN:
            return str(int(self.payload))
        return "-inf" if self.payload is NEG_INF else str(self.payload)


_ZERO = {
    Semifield.BOOLEAN: SemifieldValue(Semifield.BOOLEAN, False),
    Semifield.TROPICAL: SemifieldValue(Semifield.TROPICAL, NEG_INF),
}
_ONE = {
    Semifield.BOOLEAN: SemifieldValue(Semifield.BOOLEAN, True),
    Semifield.TROPICAL: SemifieldValue(Semifield.TROPICAL, Fraction(0)),
}

B = Semifield.BOOLEAN
T = Semifield.TROPICAL


def add(a: SemifieldValue, b: SemifieldValue) -> SemifieldValue:
    return a + b


def mul(a: SemifieldValue, b: SemifieldValue) -> SemifieldValue:
    return a * b


def inv(a: SemifieldValue) -> SemifieldValue:
    if a.is_zero:
        raise ZeroDivisionError("zero is not a unit")
    if a.tag is Semifield.BOOLEAN:
        return a
    return SemifieldValue(a.tag, -a.payload)


def natural_leq(a: SemifieldValue, b: SemifieldValue) -> bool:
    """``a <= b`` in the natural order, i.e. ``a + b == b``."""
    return a + b == b


def check_torsion_free(a: SemifieldValue, n_max: int) -> bool:
    """True iff no power ``a**n`` with ``1 <= n <= n_max`` equals 1 unless ``a`` is 1.

    Powers are computed by repeated multiplication, not by scaling the payload.
    """
    if a.is_zero:
        raise ZeroDivisionError("torsion is only defined for units")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    power = a.tag.one
    for _ in range(n_max):
        power = power * a
        if power.is_one and not a.is_one:
            return False
    return True


def ssum(values, tag: Semifield) -> SemifieldValue:
    """Semifield sum of an iterable (zero for an empty one)."""
    total = tag.zero
    for v in values:
        total = total + v
    return total


# -- JSON scalar encoding -------------------------------------------------

def to_json(value: SemifieldValue):
    if value.tag is Semifield.BOOLEAN:
        return int(value.payload)
    if value.payload is NEG_INF:
        return {"t": "ninf"}
    q = value.payload
    return {"t": "q", "num": q.numerator, "den": q.denominator}


def from_json(obj, tag: Semifield) -> SemifieldValue:
    if tag is Semifield.BOOLEAN:
        if obj not in (0, 1) or isinstance(obj, float):
            raise ValueError(f"bad Boolean scalar {obj!r}")
        return tag(int(obj))
    if not isinstance(obj, dict) or "t" not in obj:
        raise ValueError(f"bad tropical scalar {obj!r}")
    if obj["t"] == "ninf":
        return tag.zero
    if obj["t"] == "q":
        num, den = obj["num"], obj["den"]
        if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
            raise ValueError(f"bad tropical rational {obj!r}")
        q = Fraction(num, den)
        if (q.numerator, q.denominator) != (num, den):
            raise ValueError(f"tropical rational not in lowest terms: {obj!r}")
        return SemifieldValue(tag, q)
    raise ValueError(f"bad tropical scalar {obj!r}")
