"""Exact coefficient fields: the rationals and the two-element field.

Scalars are plain values supporting ``+ - * /`` and truthiness (``bool(x)``
is False exactly for zero): :class:`fractions.Fraction` for the rationals
and :class:`Bit` for GF(2).  A :class:`Field` object tags which field an
algebra works over and provides conversion, parsing and formatting; all
arithmetic goes through the scalar operators so that linear algebra and
element code stay field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction


class Bit:
    """An element of the field with two elements."""

    __slots__ = ("v",)

    def __init__(self, v=0):
        self.v = int(v) & 1

    def __add__(self, other):
        return Bit(self.v ^ other.v)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return Bit(self.v & other.v)

    def __truediv__(self, other):
        if not other.v:
            raise ZeroDivisionError("division by zero in GF(2)")
        return Bit(self.v)

    def __bool__(self):
        return bool(self.v)

    def __eq__(self, other):
        return isinstance(other, Bit) and self.v == other.v

    def __hash__(self):
        return hash(("Bit", self.v))

    def __repr__(self):
        return f"Bit({self.v})"

    def __str__(self):
        return str(self.v)


class Field:
    """Descriptor for a coefficient field ('RATIONALS' or 'GF2')."""

    tag = ""

    def from_int(self, k):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, c) -> str:
        raise NotImplementedError

    def signed_text(self, c) -> str:
        """Format with an explicit leading sign, e.g. '+3/2' or '-1'."""
        s = self.format(c)
        return s if s.startswith("-") else "+" + s

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def __repr__(self):
        return self.tag


class RationalField(Field):
    tag = "RATIONALS"

    def from_int(self, k):
        return Fraction(k)

    def parse(self, text):
        return Fraction(text)

    def format(self, c) -> str:
        return str(c)


class BinaryField(Field):
    tag = "GF2"

    def from_int(self, k):
        return Bit(k)

    def parse(self, text):
        return Bit(int(text))

    def format(self, c) -> str:
        return str(c.v)


RATIONALS = RationalField()
GF2 = BinaryField()
