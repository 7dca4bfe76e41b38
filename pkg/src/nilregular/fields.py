"""Exact coefficient fields: prime fields GF(p) and the rationals.

Field elements are plain values (ints in range(p) for prime fields,
fractions.Fraction for the rationals); the field objects only bundle the
arithmetic, so elements stay cheap to hash and compare.
"""

from __future__ import annotations

import re
from fractions import Fraction


class PrimeField:
    """Arithmetic in GF(p); elements are ints reduced into range(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def name(self) -> str:
        return f"gf{self.p}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.p

    def coerce(self, value) -> int:
        """Accepts ints, Fractions with denominator invertible mod p, and
        strings like "7" or "3/4"."""
        if isinstance(value, str):
            value = Fraction(value.replace(" ", ""))
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator))
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def coefficient_pool(self) -> tuple[list[int], bool]:
        """All field elements, flagged as exhaustive."""
        return list(range(self.p)), True

    def to_str(self, a: int) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class RationalField:
    """Exact rational arithmetic via fractions.Fraction."""

    __slots__ = ()

    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, str):
            value = value.replace(" ", "")
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def coefficient_pool(self) -> tuple[list[Fraction], bool]:
        """A small grid around 0; the rationals cannot be exhausted, so the
        flag is False and searches over this pool only report the grid."""
        grid = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2)]
        return grid, False

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")

    def __repr__(self) -> str:
        return "RationalField()"


GF2 = PrimeField(2)
GF3 = PrimeField(3)
QQ = RationalField()

_GF_NAME = re.compile(r"gf(\d+)$")


def field_from_name(name: str):
    """gf2, gf3 (any gf<prime>) or rational."""
    if name == "rational":
        return QQ
    match = _GF_NAME.match(name)
    if match:
        return PrimeField(int(match.group(1)))
    raise ValueError(f"unknown field {name!r}")
