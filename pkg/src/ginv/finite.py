"""Finite *-rings and the exhaustive-search oracle.

Elements are stored as indices into a list of canonical encodings sorted
lexicographically (integers for ``Z_n``, row-major integer tuples for
``M_k(Z_p)``, tuples of component encodings for products).  All searches
walk that order, so the first witness found is reproducible.
"""
from __future__ import annotations

import itertools
import math
import random
from functools import cached_property
from typing import Any, Iterator, Sequence

import numpy as np

from ginv import _kernels
from ginv.certificate import InverseCertificate, certify
from ginv.errors import InvalidBound, InvalidElement, Unsupported
from ginv.kinds import InverseKind
from ginv.ring import Capability, Element, StarRing


class FiniteRing(StarRing):
    """Base class: subclasses provide canonical values and raw arithmetic."""

    capabilities = frozenset({Capability.ENUMERABLE})
    exact_solve = True

    def __init__(self):
        values = sorted(self._canonical_values())
        self._values: list[Any] = values
        self._index = {v: i for i, v in enumerate(values)}
        n = len(values)
        mul = np.empty((n, n), dtype=np.intc)
        add = np.empty((n, n), dtype=np.intc)
        for i, u in enumerate(values):
            for j, v in enumerate(values):
                mul[i, j] = self._index[self._raw_mul(u, v)]
                add[i, j] = self._index[self._raw_add(u, v)]
        star = np.array([self._index[self._raw_star(u)] for u in values], dtype=np.intc)
        neg = [self._index[self._raw_neg(u)] for u in values]
        self.tables = _kernels.Tables(mul, add, star, self._index[self._raw_zero()],
                                      self._index[self._raw_one()])
        self._neg_l = neg

    # subclass hooks on canonical values
    def _canonical_values(self) -> list[Any]: raise NotImplementedError
    def _raw_add(self, u, v): raise NotImplementedError
    def _raw_mul(self, u, v): raise NotImplementedError
    def _raw_neg(self, u): raise NotImplementedError
    def _raw_star(self, u): raise NotImplementedError
    def _raw_zero(self): raise NotImplementedError
    def _raw_one(self): raise NotImplementedError
    def _encode_canonical(self, v) -> Any: raise NotImplementedError
    def _decode_canonical(self, doc) -> Any: raise NotImplementedError

    # payload primitives: payload is the element index
    def _add(self, u, v): return self.tables.add_l[u][v]
    def _neg(self, u): return self._neg_l[u]
    def _mul(self, u, v): return self.tables.mul_l[u][v]
    def _star(self, u): return self.tables.star_l[u]
    def _zero(self): return self.tables.zero
    def _one(self): return self.tables.one

    @property
    def order(self) -> int:
        return len(self._values)

    def canonical(self, e: Element) -> Any:
        return self._values[e.value]

    def encode_value(self, u: int) -> Any:
        return self._encode_canonical(self._values[u])

    def decode_value(self, doc: Any) -> int:
        v = self._decode_canonical(doc)
        try:
            return self._index[v]
        except KeyError:
            raise InvalidElement(f"{doc!r} is not an element of {self.ring_id}") from None

    def at(self, i: int) -> Element:
        return Element(self, i)

    def elements(self) -> Iterator[Element]:
        for i in range(len(self._values)):
            yield Element(self, i)

    def random_element(self, rng: random.Random) -> Element:
        return Element(self, rng.randrange(len(self._values)))

    def solve(self, terms: Sequence[tuple[Element, Element]], rhs: Element) -> Element | None:
        for l, r in terms:
            self.check(l)
            self.check(r)
        self.check(rhs)
        hits = _kernels.ACTIVE.solve_terms([l.value for l, _ in terms],
                                           [r.value for _, r in terms],
                                           rhs.value, self.tables, first=True)
        return Element(self, hits[0]) if hits else None

    def solve_all(self, terms: Sequence[tuple[Element, Element]], rhs: Element) -> list[Element]:
        hits = _kernels.ACTIVE.solve_terms([l.value for l, _ in terms],
                                           [r.value for _, r in terms],
                                           rhs.value, self.tables, first=False)
        return [Element(self, h) for h in hits]

    @cached_property
    def right_inverse_table(self) -> list[int]:
        return _kernels.ACTIVE.one_sided_inverses(self.tables, right=True)

    @cached_property
    def left_inverse_table(self) -> list[int]:
        return _kernels.ACTIVE.one_sided_inverses(self.tables, right=False)

    def projections(self) -> list[Element]:
        """All projections in canonical order."""
        t = self.tables
        return [Element(self, i) for i in range(self.order)
                if t.mul_l[i][i] == i and t.star_l[i] == i]

    def check_axioms_tables(self) -> list[str]:
        """Vectorized exhaustive axiom audit on the operation tables."""
        t = self.tables
        mul, add, star = t.mul, t.add, t.star
        failures = []
        if not np.array_equal(mul[mul, :], mul[:, mul]):
            failures.append("associativity")
        # a(b+c) = ab + ac ; (a+b)c = ac + bc
        left = mul[:, add]                      # [a,b,c] -> a*(b+c)
        right = add[mul[:, :, None], mul[:, None, :]]
        if not np.array_equal(left, right):
            failures.append("left distributivity")
        left = mul[add, :]                      # [a,b,c] -> (a+b)*c
        right = add[mul[:, None, :], mul[None, :, :]]
        if not np.array_equal(left, right):
            failures.append("right distributivity")
        idx = np.arange(self.order)
        if not (np.array_equal(mul[t.one], idx) and np.array_equal(mul[:, t.one], idx)):
            failures.append("identity")
        if not np.array_equal(star[star], idx):
            failures.append("(a*)*=a")
        if not np.array_equal(star[add], add[star[:, None], star[None, :]]):
            failures.append("(a+b)*=a*+b*")
        if not np.array_equal(star[mul], mul[star[None, :], star[:, None]]):
            failures.append("(ab)*=b*a*")
        return failures

    def default_kmax(self) -> int:
        return 4


class ZnRing(FiniteRing):
    """Integers mod n with the identity involution."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.ring_id = f"Z{n}"
        super().__init__()

    def _canonical_values(self): return list(range(self.n))
    def _raw_add(self, u, v): return (u + v) % self.n
    def _raw_mul(self, u, v): return (u * v) % self.n
    def _raw_neg(self, u): return (-u) % self.n
    def _raw_star(self, u): return u
    def _raw_zero(self): return 0
    def _raw_one(self): return 1 % self.n
    def _encode_canonical(self, v): return v

    def _decode_canonical(self, doc):
        if isinstance(doc, str):
            doc = int(doc.strip())
        if not isinstance(doc, int):
            raise InvalidElement(f"{doc!r} is not an integer")
        return doc % self.n

    def spec(self) -> dict:
        return {"kind": "Zn", "n": self.n, "involution": "identity"}

    def default_kmax(self) -> int:
        return math.ceil(math.log2(self.n)) + 1 if self.n > 1 else 1


class MatZpRing(FiniteRing):
    """``M_k(Z_p)`` with the transpose involution."""

    def __init__(self, p: int, size: int):
        if p < 2 or size < 1:
            raise ValueError("need p >= 2 and size >= 1")
        if p ** (size * size) > 4096:
            raise ValueError("ring too large for table-based enumeration")
        self.p = p
        self.size = size
        self.ring_id = f"M{size}(Z{p})"
        super().__init__()

    def _canonical_values(self):
        return list(itertools.product(range(self.p), repeat=self.size * self.size))

    def _raw_add(self, u, v):
        return tuple((x + y) % self.p for x, y in zip(u, v))

    def _raw_mul(self, u, v):
        k, p = self.size, self.p
        return tuple(sum(u[i * k + t] * v[t * k + j] for t in range(k)) % p
                     for i in range(k) for j in range(k))

    def _raw_neg(self, u): return tuple((-x) % self.p for x in u)

    def _raw_star(self, u):
        k = self.size
        return tuple(u[j * k + i] for i in range(k) for j in range(k))

    def _raw_zero(self): return (0,) * (self.size * self.size)

    def _raw_one(self):
        k = self.size
        return tuple(1 % self.p if i == j else 0 for i in range(k) for j in range(k))

    def _encode_canonical(self, v):
        k = self.size
        return [list(v[i * k:(i + 1) * k]) for i in range(k)]

    def _decode_canonical(self, doc):
        if isinstance(doc, str):
            import json
            doc = json.loads(doc)
        k = self.size
        if len(doc) != k or any(len(row) != k for row in doc):
            raise InvalidElement(f"{doc!r} is not a {k}x{k} matrix")
        return tuple(int(x) % self.p for row in doc for x in row)

    def spec(self) -> dict:
        return {"kind": "MatZp", "p": self.p, "size": self.size, "involution": "transpose"}

    def default_kmax(self) -> int:
        return self.size


class ProductRing(FiniteRing):
    """Direct product of finite *-rings with componentwise operations."""

    def __init__(self, factors: Sequence[FiniteRing]):
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = tuple(factors)
        self.ring_id = "x".join(f.ring_id for f in self.factors)
        super().__init__()

    def _canonical_values(self):
        return list(itertools.product(*(f._values for f in self.factors)))

    def _lift(self, op, *args):
        out = []
        for i, f in enumerate(self.factors):
            parts = [f._index[arg[i]] for arg in args]
            out.append(f._values[op(f, *parts)])
        return tuple(out)

    def _raw_add(self, u, v): return self._lift(lambda f, x, y: f._add(x, y), u, v)
    def _raw_mul(self, u, v): return self._lift(lambda f, x, y: f._mul(x, y), u, v)
    def _raw_neg(self, u): return self._lift(lambda f, x: f._neg(x), u)
    def _raw_star(self, u): return self._lift(lambda f, x: f._star(x), u)
    def _raw_zero(self): return tuple(f._values[f._zero()] for f in self.factors)
    def _raw_one(self): return tuple(f._values[f._one()] for f in self.factors)

    def _encode_canonical(self, v):
        return [f._encode_canonical(x) for f, x in zip(self.factors, v)]

    def _decode_canonical(self, doc):
        if isinstance(doc, str):
            import json
            doc = json.loads(doc)
        if len(doc) != len(self.factors):
            raise InvalidElement(f"{doc!r} needs {len(self.factors)} components")
        return tuple(f._decode_canonical(d) for f, d in zip(self.factors, doc))

    def spec(self) -> dict:
        return {"kind": "Product", "factors": [f.spec() for f in self.factors],
                "involution": "componentwise"}

    def default_kmax(self) -> int:
        return max(f.default_kmax() for f in self.factors)


# -- oracle -------------------------------------------------------------------

def _require_finite(ring: StarRing) -> FiniteRing:
    if not isinstance(ring, FiniteRing):
        raise Unsupported(f"{ring.ring_id} is not enumerable")
    return ring


def _index_range(kind: InverseKind, k_max: int) -> range:
    if not kind.indexed:
        return range(1, 2)
    return range(kind.min_index, k_max + 1)


def oracle_witnesses(a: Element, kind: InverseKind,
                     aux: tuple[Element, Element] | None = None,
                     k_max: int | None = None) -> list[tuple[Element, int]]:
    """Every ``(x, k)`` satisfying the kind's equations, k ascending.

    For non-indexed kinds k is reported as 1.  Each x is listed once, with
    the least k at which it qualifies.
    """
    ring = _require_finite(a.ring)
    if k_max is None:
        k_max = ring.default_kmax()
    if k_max < 1:
        raise InvalidBound(f"k_max must be >= 1, got {k_max}")
    if kind.needs_aux and aux is None:
        raise ValueError(f"kind {kind.value} needs an auxiliary (b, c) pair")
    b, c = (aux[0].value, aux[1].value) if aux else (0, 0)
    code = _kernels.KIND_CODES[kind.value]
    seen: set[int] = set()
    out = []
    for k in _index_range(kind, k_max):
        for x in _kernels.ACTIVE.search(code, a.value, k, b, c, ring.tables):
            if x not in seen:
                seen.add(x)
                out.append((Element(ring, x), k))
    return out


def oracle_search(a: Element, kind: InverseKind,
                  aux: tuple[Element, Element] | None = None,
                  k_max: int | None = None) -> InverseCertificate | None:
    """First witness in canonical order at the least index, re-verified."""
    ring = _require_finite(a.ring)
    if k_max is None:
        k_max = ring.default_kmax()
    if k_max < 1:
        raise InvalidBound(f"k_max must be >= 1, got {k_max}")
    if kind.needs_aux and aux is None:
        raise ValueError(f"kind {kind.value} needs an auxiliary (b, c) pair")
    b, c = (aux[0].value, aux[1].value) if aux else (0, 0)
    code = _kernels.KIND_CODES[kind.value]
    for k in _index_range(kind, k_max):
        hits = _kernels.ACTIVE.search(code, a.value, k, b, c, ring.tables, first=True)
        if hits:
            return certify(kind, a, Element(ring, hits[0]), k, "oracle", aux)
    return None


def left_annihilator(a: Element) -> set[Element]:
    ring = _require_finite(a.ring)
    col = ring.tables.mul[:, a.value]
    return {Element(ring, int(i)) for i in np.flatnonzero(col == ring.tables.zero)}


def right_annihilator(a: Element) -> set[Element]:
    ring = _require_finite(a.ring)
    row = ring.tables.mul[a.value, :]
    return {Element(ring, int(i)) for i in np.flatnonzero(row == ring.tables.zero)}


def dedekind_finiteness_audit(ring: StarRing) -> bool:
    """True iff every right-invertible element is two-sided invertible."""
    ring = _require_finite(ring)
    right = ring.right_inverse_table
    left = ring.left_inverse_table
    return all(l >= 0 for r, l in zip(right, left) if r >= 0)


def is_right_invertible(u: Element) -> bool:
    ring = _require_finite(u.ring)
    return ring.right_inverse_table[u.value] >= 0


def is_left_invertible(u: Element) -> bool:
    ring = _require_finite(u.ring)
    return ring.left_inverse_table[u.value] >= 0
