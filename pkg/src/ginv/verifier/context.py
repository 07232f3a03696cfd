"""Memoized primitive queries shared by claim conditions.

Conditions may share primitives (a witness search, an ideal membership
solve) but never each other's results, so removing one condition leaves the
other columns of a truth vector unchanged.
"""
from __future__ import annotations

from functools import cached_property
from typing import Callable, Sequence

from ginv import _kernels
from ginv.errors import Unsupported
from ginv.finite import FiniteRing
from ginv.kinds import InverseKind
from ginv.ring import Capability, Element, StarRing

ENUM = "enumerable"
SOLVE = "exact-solve"

#: bound used for universally or existentially quantified n, k
QUANT = (1, 2, 3, 4)
POWERS = (2, 3, 4)


def ring_features(ring: StarRing) -> frozenset[str]:
    out = set()
    if Capability.ENUMERABLE in ring.capabilities:
        out.add(ENUM)
    if ring.can_solve() and ring.exact_solve:
        out.add(SOLVE)
    return frozenset(out)


class EvalContext:
    def __init__(self, ring: StarRing):
        self.ring = ring
        self.features = ring_features(ring)
        self.k_max = max(max(QUANT), ring.default_kmax())
        self._witness_cache: dict = {}
        self._solve_cache: dict = {}

    # -- enumeration ---------------------------------------------------------
    def _finite(self) -> FiniteRing:
        if not isinstance(self.ring, FiniteRing):
            raise Unsupported(f"{self.ring.ring_id} is not enumerable")
        return self.ring

    @cached_property
    def elements(self) -> list[Element]:
        return list(self._finite().elements())

    @cached_property
    def projections(self) -> list[Element]:
        return self._finite().projections()

    def find(self, pred: Callable[[Element], bool]) -> Element | None:
        for x in self.elements:
            if pred(x):
                return x
        return None

    def find_all(self, pred: Callable[[Element], bool]) -> list[Element]:
        return [x for x in self.elements if pred(x)]

    def witnesses(self, kind: InverseKind, a: Element, k: int = 1,
                  aux: tuple[Element, Element] | None = None) -> tuple[Element, ...]:
        """All x satisfying the kind's equations at exactly this k."""
        key = (kind, a.value, k, None if aux is None else (aux[0].value, aux[1].value))
        hit = self._witness_cache.get(key)
        if hit is None:
            ring = self._finite()
            b, c = key[3] or (0, 0)
            xs = _kernels.ACTIVE.search(_kernels.KIND_CODES[kind.value], a.value, k, b, c,
                                        ring.tables)
            hit = tuple(Element(ring, x) for x in xs)
            self._witness_cache[key] = hit
        return hit

    def has(self, kind: InverseKind, a: Element, k: int = 1,
            aux: tuple[Element, Element] | None = None) -> bool:
        return bool(self.witnesses(kind, a, k, aux))

    def least_index(self, kind: InverseKind, a: Element) -> int | None:
        for k in range(kind.min_index, self.k_max + 1):
            if self.witnesses(kind, a, k):
                return k
        return None

    def indexed_witnesses(self, kind: InverseKind, a: Element) -> list[tuple[Element, int]]:
        """Every (x, k) with k in range and x satisfying the equations at k."""
        return [(x, k) for k in range(kind.min_index, self.k_max + 1)
                for x in self.witnesses(kind, a, k)]

    # -- linear solving --------------------------------------------------------
    def solve(self, terms: Sequence[tuple[Element, Element]], rhs: Element) -> Element | None:
        key = (tuple((l.value, r.value) for l, r in terms), rhs.value)
        if key in self._solve_cache:
            return self._solve_cache[key]
        x = self.ring.solve(terms, rhs)
        self._solve_cache[key] = x
        return x

    def solutions(self, terms: Sequence[tuple[Element, Element]],
                  rhs: Element) -> list[Element]:
        return self._finite().solve_all(terms, rhs)

    def in_right(self, y: Element, a: Element) -> bool:
        """y in aR."""
        return self.solve([(a, self.ring.one)], y) is not None

    def in_left(self, y: Element, a: Element) -> bool:
        """y in Ra."""
        return self.solve([(self.ring.one, a)], y) is not None

    def right_ideals_equal(self, a: Element, b: Element) -> bool:
        return self.in_right(a, b) and self.in_right(b, a)

    def left_ideals_equal(self, a: Element, b: Element) -> bool:
        return self.in_left(a, b) and self.in_left(b, a)

    def right_invertible(self, u: Element) -> bool:
        if isinstance(self.ring, FiniteRing):
            return self.ring.right_inverse_table[u.value] >= 0
        return self.solve([(u, self.ring.one)], self.ring.one) is not None

    def right_inverses(self, u: Element) -> list[Element]:
        return self.solutions([(u, self.ring.one)], self.ring.one)


