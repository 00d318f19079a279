"""Scalar fields backing the exact arithmetic layers.

Field elements are opaque values that must support ``+``, ``-``, ``*``,
``/``, ``==``, ``hash`` and truthiness (nonzero test).  The field object
itself supplies constants, the integer embedding, the characteristic,
and text round-tripping, which is everything the matrix and polynomial
layers ask for.  Only the rationals are shipped; a rational-function
field of prime characteristic can slot in behind the same contract.
"""

from __future__ import annotations

import re
from fractions import Fraction


class Field:
    """Abstract scalar field contract."""

    name = "abstract"

    def characteristic(self) -> int:
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def coerce(self, value):
        """Convert ``value`` to a field element or raise ``TypeError``."""
        raise NotImplementedError

    def inverse(self, x):
        if not x:
            raise ZeroDivisionError("zero has no inverse")
        return self.one() / x

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


class Rationals(Field):
    """Arbitrary-precision rationals, always kept in lowest terms.

    ``fractions.Fraction`` guarantees the lowest-terms/positive-denominator
    invariant, so no normalisation is done here.
    """

    name = "rationals"

    def characteristic(self) -> int:
        return 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to a rational exactly")

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL_RE.match(text)
        if not m:
            raise ValueError(f"not a rational literal: {text!r}")
        num, den = m.group(1), m.group(2)
        if den is None:
            return Fraction(int(num))
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational literal: {text!r}")
        return Fraction(int(num), int(den))

    def format(self, x) -> str:
        return str(x)


QQ = Rationals()
