"""Abstract *-ring layer.

Every backend subclasses :class:`StarRing` and supplies arithmetic on its own
canonical payloads. User code works with :class:`Element`, an immutable
wrapper that carries its ring and gives operator syntax::

    a * x * a == a
    (a * x).star == a * x

Equality of elements is equality of canonical payloads, so two elements are
equal iff their canonical text encodings coincide.
"""
from __future__ import annotations

import enum
import json
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from ginv.errors import InvalidElement, NotAProjection, Unsupported


class Capability(enum.Enum):
    ENUMERABLE = "Enumerable"
    LINEAR_SOLVABLE = "LinearSolvable"
    RANK_COMPUTABLE = "RankComputable"


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class IdealRelation(enum.Enum):
    EQUAL = "Equal"
    A_SUB_B = "AsubB"
    B_SUB_A = "BsubA"
    INCOMPARABLE = "Incomparable"


class StarRing(ABC):
    """A ring with identity and involution.

    Subclasses implement the payload-level primitives (``_add``, ``_neg``,
    ``_mul``, ``_star``), the codec (``encode_value``/``decode_value``) and,
    when they can, :meth:`solve`.
    """

    ring_id: str
    capabilities: frozenset[Capability] = frozenset()
    #: True when ``solve`` returning None proves that no solution exists.
    exact_solve: bool = True

    # -- payload primitives -------------------------------------------------
    @abstractmethod
    def _add(self, u: Any, v: Any) -> Any: ...

    @abstractmethod
    def _neg(self, u: Any) -> Any: ...

    @abstractmethod
    def _mul(self, u: Any, v: Any) -> Any: ...

    @abstractmethod
    def _star(self, u: Any) -> Any: ...

    @abstractmethod
    def _zero(self) -> Any: ...

    @abstractmethod
    def _one(self) -> Any: ...

    @abstractmethod
    def encode_value(self, u: Any) -> Any:
        """JSON-compatible canonical encoding of a payload."""

    @abstractmethod
    def decode_value(self, doc: Any) -> Any:
        """Inverse of :meth:`encode_value`; also accepts backend shorthands."""

    @abstractmethod
    def spec(self) -> dict:
        """The ring spec document that rebuilds this ring."""

    # -- element level ------------------------------------------------------
    @property
    def zero(self) -> "Element":
        return Element(self, self._zero())

    @property
    def one(self) -> "Element":
        return Element(self, self._one())

    def element(self, doc: Any) -> "Element":
        return Element(self, self.decode_value(doc))

    def from_int(self, n: int) -> "Element":
        acc = self._zero()
        unit = self._one() if n >= 0 else self._neg(self._one())
        for _ in range(abs(n)):
            acc = self._add(acc, unit)
        return Element(self, acc)

    def encode(self, e: "Element") -> Any:
        self.check(e)
        return self.encode_value(e.value)

    def format(self, e: "Element") -> str:
        """Canonical text: compact JSON of the canonical encoding."""
        return json.dumps(self.encode(e), separators=(",", ":"), sort_keys=True)

    def check(self, e: "Element") -> None:
        if not isinstance(e, Element) or e.ring.ring_id != self.ring_id:
            raise InvalidElement(f"{e!r} is not an element of {self.ring_id}")

    def elements(self) -> Iterator["Element"]:
        raise Unsupported(f"{self.ring_id} is not enumerable")

    def random_element(self, rng: random.Random) -> "Element":
        raise Unsupported(f"{self.ring_id} cannot sample elements")

    def solve(self, terms: Sequence[tuple["Element", "Element"]],
              rhs: "Element") -> "Element | None":
        """Find some x with ``sum(l * x * r for l, r in terms) == rhs``."""
        raise Unsupported(f"{self.ring_id} cannot solve linear equations")

    def can_solve(self) -> bool:
        return bool(self.capabilities & {Capability.ENUMERABLE,
                                         Capability.LINEAR_SOLVABLE})

    def default_kmax(self) -> int:
        return 4

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.ring_id}>"


class Element:
    """Immutable element of a :class:`StarRing`."""

    __slots__ = ("ring", "value", "_hash")

    def __init__(self, ring: StarRing, value: Any):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def _coerce(self, other: Any) -> "Element":
        if isinstance(other, Element):
            if other.ring is not self.ring and other.ring.ring_id != self.ring.ring_id:
                raise InvalidElement(
                    f"ring mismatch: {self.ring.ring_id} vs {other.ring.ring_id}")
            return other
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero
            if other == 1:
                return self.ring.one
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, self.ring._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring._add(self.value, self.ring._neg(other.value)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring._mul(self.value, other.value))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring._mul(other.value, self.value))

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers are not defined in a ring")
        acc = self.ring._one()
        base = self.value
        while n:
            if n & 1:
                acc = self.ring._mul(acc, base)
            n >>= 1
            if n:
                base = self.ring._mul(base, base)
        return Element(self.ring, acc)

    @property
    def star(self) -> "Element":
        return Element(self.ring, self.ring._star(self.value))

    def is_zero(self) -> bool:
        return self.value == self.ring._zero()

    def __eq__(self, other):
        if not isinstance(other, Element):
            if isinstance(other, int) and other in (0, 1):
                return self == self._coerce(other)
            return NotImplemented
        return self.ring.ring_id == other.ring.ring_id and self.value == other.value

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring.ring_id, self.value))
            object.__setattr__(self, "_hash", h)
        return h

    def encode(self) -> Any:
        return self.ring.encode_value(self.value)

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"Element({self.ring.ring_id}, {self.ring.format(self)})"


# -- projections and Peirce decomposition -----------------------------------

def is_projection(e: Element) -> bool:
    if not isinstance(e, Element):
        raise InvalidElement(f"{e!r} is not a ring element")
    return e * e == e and e.star == e


@dataclass(frozen=True)
class Projection:
    element: Element

    def __post_init__(self):
        if not is_projection(self.element):
            raise NotAProjection(f"{self.element} is not a projection")

    @property
    def complement(self) -> Element:
        return 1 - self.element


@dataclass(frozen=True)
class PeirceBlocks:
    """Blocks ``[[a11, a12], [a21, a22]]`` of an element relative to ``p``."""

    p: Projection
    a11: Element
    a12: Element
    a21: Element
    a22: Element

    def reconstruct(self) -> Element:
        return self.a11 + self.a12 + self.a21 + self.a22

    def star(self) -> "PeirceBlocks":
        # star transposes the block pattern
        return PeirceBlocks(self.p, self.a11.star, self.a21.star,
                            self.a12.star, self.a22.star)

    def as_rows(self) -> tuple[tuple[Element, Element], tuple[Element, Element]]:
        return (self.a11, self.a12), (self.a21, self.a22)


def peirce_decompose(a: Element, p: Projection | Element) -> PeirceBlocks:
    if not isinstance(p, Projection):
        p = Projection(p)
    a.ring.check(p.element)
    q = p.element
    q_bar = 1 - q
    return PeirceBlocks(p, q * a * q, q * a * q_bar, q_bar * a * q, q_bar * a * q_bar)


# -- ideals -------------------------------------------------------------------

def in_right_ideal(y: Element, a: Element) -> Element | None:
    """Return t with ``y = a t`` (so y lies in aR), else None."""
    return a.ring.solve([(a, a.ring.one)], y)


def in_left_ideal(y: Element, a: Element) -> Element | None:
    """Return s with ``y = s a`` (so y lies in Ra), else None."""
    return a.ring.solve([(a.ring.one, a)], y)


def ideal_compare(a: Element, b: Element, side: Side = Side.RIGHT) -> IdealRelation:
    """Classify ``aR`` against ``bR`` (or ``Ra`` against ``Rb``)."""
    ring = a.ring
    ring.check(b)
    if not ring.can_solve():
        raise Unsupported(f"{ring.ring_id} cannot decide ideal membership")
    member = in_right_ideal if side is Side.RIGHT else in_left_ideal
    a_in_b = member(a, b) is not None
    b_in_a = member(b, a) is not None
    if a_in_b and b_in_a:
        return IdealRelation.EQUAL
    if a_in_b:
        return IdealRelation.A_SUB_B
    if b_in_a:
        return IdealRelation.B_SUB_A
    return IdealRelation.INCOMPARABLE


def ideals_equal(a: Element, b: Element, side: Side = Side.RIGHT) -> bool:
    return ideal_compare(a, b, side) is IdealRelation.EQUAL


# -- axiom audit --------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    ring_id: str
    triples_checked: int
    exhaustive: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _triple_failures(a: Element, b: Element, c: Element) -> list[str]:
    one = a.ring.one
    bad = []
    if (a * b) * c != a * (b * c):
        bad.append("associativity")
    if a * (b + c) != a * b + a * c or (a + b) * c != a * c + b * c:
        bad.append("distributivity")
    if one * a != a or a * one != a:
        bad.append("identity")
    if a.star.star != a:
        bad.append("(a*)*=a")
    if (a + b).star != a.star + b.star:
        bad.append("(a+b)*=a*+b*")
    if (a * b).star != b.star * a.star:
        bad.append("(ab)*=b*a*")
    return bad


def check_axioms(ring: StarRing, samples: int = 1000, seed: int = 0) -> AxiomReport:
    """Audit ring and involution axioms.

    Exhaustive over all triples for enumerable rings, otherwise ``samples``
    random triples drawn from a ``random.Random(seed)`` stream.
    """
    failures: list[str] = []
    if Capability.ENUMERABLE in ring.capabilities:
        elems = list(ring.elements())
        triples = ((a, b, c) for a in elems for b in elems for c in elems)
        exhaustive = True
    else:
        rng = random.Random(seed)
        triples = ((ring.random_element(rng), ring.random_element(rng),
                    ring.random_element(rng)) for _ in range(samples))
        exhaustive = False
    count = 0
    for a, b, c in triples:
        count += 1
        for name in _triple_failures(a, b, c):
            failures.append(f"{name} fails at ({a}, {b}, {c})")
        if len(failures) > 20:
            break
    return AxiomReport(ring.ring_id, count, exhaustive, tuple(failures))
