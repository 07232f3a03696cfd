"""Inverse kinds and their defining equations.

Each kind maps to a fixed list of equations in the candidate ``x``, the input
``a``, an index ``k`` (for indexed kinds) and an auxiliary pair ``(b, c)``
(for the (b,c)-type kinds).  ``defining_equations`` evaluates them with plain
ring arithmetic; it is the independent checker every certificate is replayed
against.

==================  ==========================================================
kind                equations
==================  ==========================================================
inner               axa = a
one-three           axa = a, (ax)* = ax
one-four            axa = a, (xa)* = xa
mp                  axa = a, xax = x, (ax)* = ax, (xa)* = xa
group               axa = a, xax = x, ax = xa
drazin              xax = x, ax = xa, a^k = a^(k+1) x          (k >= 0)
core                xa^2 = a, ax^2 = x, (ax)* = ax
dual-core           a^2x = a, x^2a = x, (xa)* = xa
right-core          axa = a, ax^2 = x, (ax)* = ax
left-core           axa = a, x^2a = x, (xa)* = xa
pseudo-core         xa^(k+1) = a^k, ax^2 = x, (ax)* = ax        (k >= 1)
right-pseudo-core   axa^k = a^k, ax^2 = x, (ax)* = ax           (k >= 1)
right-inverse       ax = 1
left-inverse        xa = 1
ep                  axa = a, xax = x, (ax)* = ax, (xa)* = xa, ax = xa
bc                  x in bRx, x in xRc, xab = b, cax = c
left-bc             x in Rc, xab = b
right-bc            x in bR, cax = c
==================  ==========================================================
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from ginv.ring import Element


class InverseKind(enum.Enum):
    INNER = "inner"
    ONE_THREE = "one-three"
    ONE_FOUR = "one-four"
    MP = "mp"
    GROUP = "group"
    DRAZIN = "drazin"
    CORE = "core"
    DUAL_CORE = "dual-core"
    RIGHT_CORE = "right-core"
    LEFT_CORE = "left-core"
    PSEUDO_CORE = "pseudo-core"
    RIGHT_PSEUDO_CORE = "right-pseudo-core"
    RIGHT_INVERSE = "right-inverse"
    LEFT_INVERSE = "left-inverse"
    EP = "ep"
    BC = "bc"
    LEFT_BC = "left-bc"
    RIGHT_BC = "right-bc"

    @property
    def indexed(self) -> bool:
        return self in _INDEXED

    @property
    def unique(self) -> bool:
        """Kinds whose witness is unique whenever it exists."""
        return self in _UNIQUE

    @property
    def needs_aux(self) -> bool:
        return self in _AUX

    @property
    def min_index(self) -> int:
        return 0 if self is InverseKind.DRAZIN else 1

    @classmethod
    def parse(cls, name: str) -> "InverseKind":
        key = name.strip().lower().replace("_", "-")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown kind {name!r}; valid kinds: {', '.join(kind_names())}")


_INDEXED = {InverseKind.DRAZIN, InverseKind.PSEUDO_CORE, InverseKind.RIGHT_PSEUDO_CORE}
_UNIQUE = {InverseKind.MP, InverseKind.GROUP, InverseKind.DRAZIN, InverseKind.CORE,
           InverseKind.DUAL_CORE, InverseKind.PSEUDO_CORE, InverseKind.EP, InverseKind.BC}
_AUX = {InverseKind.BC, InverseKind.LEFT_BC, InverseKind.RIGHT_BC}


def kind_names() -> list[str]:
    return [k.value for k in InverseKind]


@dataclass(frozen=True)
class Equation:
    """One instantiated equation ``lhs == rhs``.

    ``rhs`` is None for a membership equation whose existential witness could
    not be found; such an equation does not hold.
    """

    eq_id: str
    lhs: Element
    rhs: Element | None

    @property
    def holds(self) -> bool:
        return self.rhs is not None and self.lhs == self.rhs

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.eq_id,
            "lhs": self.lhs.encode(),
            "rhs": None if self.rhs is None else self.rhs.encode(),
            "holds": self.holds,
        }


def _member_right(y: Element, left: Element, tail: Element | None = None) -> Element | None:
    # y == left * s * tail for some s
    ring = y.ring
    s = ring.solve([(left, tail if tail is not None else ring.one)], y)
    if s is None:
        return None
    return left * s * (tail if tail is not None else ring.one)


def _member_left(y: Element, head: Element | None, right: Element) -> Element | None:
    # y == head * s * right for some s
    ring = y.ring
    s = ring.solve([(head if head is not None else ring.one, right)], y)
    if s is None:
        return None
    return (head if head is not None else ring.one) * s * right


def defining_equations(kind: InverseKind, a: Element, x: Element, k: int = 1,
                       aux: tuple[Element, Element] | None = None) -> list[Equation]:
    ring = a.ring
    ring.check(x)
    one = ring.one
    ax, xa = a * x, x * a
    K = InverseKind
    if kind is K.INNER:
        return [Equation("axa=a", ax * a, a)]
    if kind is K.ONE_THREE:
        return [Equation("axa=a", ax * a, a), Equation("(ax)*=ax", ax.star, ax)]
    if kind is K.ONE_FOUR:
        return [Equation("axa=a", ax * a, a), Equation("(xa)*=xa", xa.star, xa)]
    if kind is K.MP or kind is K.EP:
        eqs = [Equation("axa=a", ax * a, a), Equation("xax=x", xa * x, x),
               Equation("(ax)*=ax", ax.star, ax), Equation("(xa)*=xa", xa.star, xa)]
        if kind is K.EP:
            eqs.append(Equation("ax=xa", ax, xa))
        return eqs
    if kind is K.GROUP:
        return [Equation("axa=a", ax * a, a), Equation("xax=x", xa * x, x),
                Equation("ax=xa", ax, xa)]
    if kind is K.DRAZIN:
        ak = a ** k
        return [Equation("xax=x", xa * x, x), Equation("ax=xa", ax, xa),
                Equation("a^k=a^(k+1)x", ak, ak * a * x)]
    if kind is K.CORE:
        return [Equation("xa^2=a", xa * a, a), Equation("ax^2=x", ax * x, x),
                Equation("(ax)*=ax", ax.star, ax)]
    if kind is K.DUAL_CORE:
        return [Equation("a^2x=a", a * ax, a), Equation("x^2a=x", x * xa, x),
                Equation("(xa)*=xa", xa.star, xa)]
    if kind is K.RIGHT_CORE:
        return [Equation("axa=a", ax * a, a), Equation("ax^2=x", ax * x, x),
                Equation("(ax)*=ax", ax.star, ax)]
    if kind is K.LEFT_CORE:
        return [Equation("axa=a", ax * a, a), Equation("x^2a=x", x * xa, x),
                Equation("(xa)*=xa", xa.star, xa)]
    if kind is K.PSEUDO_CORE:
        ak = a ** k
        return [Equation("xa^(k+1)=a^k", x * ak * a, ak), Equation("ax^2=x", ax * x, x),
                Equation("(ax)*=ax", ax.star, ax)]
    if kind is K.RIGHT_PSEUDO_CORE:
        ak = a ** k
        return [Equation("axa^k=a^k", ax * ak, ak), Equation("ax^2=x", ax * x, x),
                Equation("(ax)*=ax", ax.star, ax)]
    if kind is K.RIGHT_INVERSE:
        return [Equation("ax=1", ax, one)]
    if kind is K.LEFT_INVERSE:
        return [Equation("xa=1", xa, one)]
    if aux is None:
        raise ValueError(f"kind {kind.value} needs an auxiliary (b, c) pair")
    b, c = aux
    ring.check(b)
    ring.check(c)
    if kind is K.BC:
        return [Equation("x in bRx", x, _member_right(x, b, x)),
                Equation("x in xRc", x, _member_left(x, x, c)),
                Equation("xab=b", xa * b, b), Equation("cax=c", c * ax, c)]
    if kind is K.LEFT_BC:
        return [Equation("x in Rc", x, _member_left(x, None, c)),
                Equation("xab=b", xa * b, b)]
    if kind is K.RIGHT_BC:
        return [Equation("x in bR", x, _member_right(x, b)),
                Equation("cax=c", c * ax, c)]
    raise ValueError(f"unhandled kind {kind}")


def satisfies(kind: InverseKind, a: Element, x: Element, k: int = 1,
              aux: tuple[Element, Element] | None = None) -> bool:
    return all(eq.holds for eq in defining_equations(kind, a, x, k, aux))
