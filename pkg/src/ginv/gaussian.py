"""Exact Gaussian rationals ``p + q i`` with ``p, q`` in Q."""
from __future__ import annotations

import re
from fractions import Fraction

_NUM = r"(?:\d+(?:/\d+)?)"
_TERM = re.compile(rf"([+-]?)({_NUM})?(i?)")


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re_part=0, im_part=0):
        object.__setattr__(self, "re", Fraction(re_part))
        object.__setattr__(self, "im", Fraction(im_part))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v)
        if isinstance(v, str):
            return cls.parse(v)
        raise TypeError(f"cannot convert {v!r} to a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``"3/4+1/2i"``, ``"-i"``, ``"2"``, ``"1/3i"`` and the like."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty number")
        re_part = Fraction(0)
        im_part = Fraction(0)
        pos = 0
        seen = False
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or (seen and not m.group(1)):
                raise ValueError(f"malformed Gaussian rational {text!r}")
            sign, num, imag = m.groups()
            if not num and not imag:
                raise ValueError(f"malformed Gaussian rational {text!r}")
            value = Fraction(num) if num else Fraction(1)
            if sign == "-":
                value = -value
            if imag:
                im_part += value
            else:
                re_part += value
            pos = m.end()
            seen = True
        return cls(re_part, im_part)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = f"{self.im}i"
        if self.re == 0:
            return im
        return f"{self.re}{'' if self.im < 0 else '+'}{im}"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        o = _as_gr(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _as_gr(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _as_gr(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _as_gr(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_gr(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = _as_gr(other)
        if o is None:
            return NotImplemented
        return o / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0


def _as_gr(v) -> GaussianRational | None:
    if isinstance(v, GaussianRational):
        return v
    if isinstance(v, (int, Fraction)):
        return GaussianRational(v)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
