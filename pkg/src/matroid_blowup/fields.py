"""Exact scalar fields: the rationals and prime fields GF(p).

Rationals are ``gmpy2.mpq`` values; prime-field elements are
:class:`GFElement`. Both support the usual arithmetic operators, so the
linear algebra in :mod:`matroid_blowup.linalg` is written once.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from gmpy2 import mpq


class GFElement:
    """An element of the prime field GF(p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return GFElement(other, self.p) / self

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GFElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[mpq, GFElement]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Field tag plus scalar constructor. ``Field("Q")`` or ``Field("GF(2)")``."""

    _GF = re.compile(r"^GF[(:]?\s*(\d+)\s*\)?$")

    def __init__(self, tag: str = "Q"):
        tag = tag.strip()
        if tag == "Q":
            self.p = 0
        else:
            m = self._GF.match(tag)
            if not m:
                raise ValueError(f"unknown field tag {tag!r}")
            p = int(m.group(1))
            if not _is_prime(p):
                raise ValueError(f"GF({p}): {p} is not prime")
            self.p = p

    @property
    def tag(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, scalar string ("a/b") or field element."""
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise ValueError(f"{value!r} is not in {self.tag}")
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p == 0:
            return mpq(value)
        value = Fraction(int(mpq(value).numerator), int(mpq(value).denominator))
        if value.denominator % self.p == 0:
            raise ValueError(f"{value} has no image in {self.tag}")
        return GFElement(value.numerator, self.p) / value.denominator

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.tag!r})"


def scalar_to_str(x: Scalar) -> str:
    return str(x)


QQ = Field("Q")
