"""Banded Toeplitz operators plus finite-rank corrections on l^2(N), over Q.

An element is ``T(symbol) + K``: the Toeplitz part has entry ``symbol[j - i]``
at position ``(i, j)`` (so the forward shift S is ``{-1: 1}``), and ``K`` is a
finite matrix supported in the top-left corner.  The involution is the
transpose.  Because ``S* S = 1`` but ``S S* = 1 - E00``, this ring is not
Dedekind-finite, which is what separates one-sided notions from two-sided
ones.

Linear equations are solved over a bounded ansatz (symbol degrees within
``+-band_bound``, correction within ``corr_bound x corr_bound``); a miss is
"unknown at bound", never a proof of nonexistence.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

from ginv import linalg
from ginv.errors import InternalInconsistency, InvalidElement
from ginv.kinds import InverseKind, satisfies
from ginv.ring import Capability, Element, StarRing

F0, F1 = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class ToeplitzElement:
    symbol: tuple[tuple[int, Fraction], ...]
    correction: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def make(cls, symbol: Mapping[int, Any] | None = None,
             correction: Sequence[Sequence[Any]] | Mapping[tuple[int, int], Any] | None = None
             ) -> "ToeplitzElement":
        sym = {}
        for d, v in (symbol or {}).items():
            v = Fraction(v)
            if v:
                sym[int(d)] = v
        entries: dict[tuple[int, int], Fraction] = {}
        if isinstance(correction, Mapping):
            items = correction.items()
        else:
            items = (((i, j), v) for i, row in enumerate(correction or ())
                     for j, v in enumerate(row))
        for (i, j), v in items:
            v = Fraction(v)
            if v:
                entries[(i, j)] = entries.get((i, j), F0) + v
        return cls(tuple(sorted(sym.items())), _dense(entries))

    @property
    def symbol_map(self) -> dict[int, Fraction]:
        return dict(self.symbol)

    @property
    def bandwidth(self) -> int:
        return max((abs(d) for d, _ in self.symbol), default=0)

    @property
    def corr_size(self) -> int:
        return len(self.correction)

    def entry(self, i: int, j: int) -> Fraction:
        v = self.symbol_map.get(j - i, F0)
        m = self.corr_size
        if i < m and j < m:
            v += self.correction[i][j]
        return v

    def corner(self, n: int) -> list[list[Fraction]]:
        """Top-left ``n x n`` truncation as a dense matrix."""
        sym = self.symbol_map
        m = self.corr_size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                v = sym.get(j - i, F0)
                if i < m and j < m:
                    v += self.correction[i][j]
                row.append(v)
            out.append(row)
        return out

    def to_json(self) -> dict:
        return {"symbol": {str(d): str(v) for d, v in self.symbol},
                "correction": [[str(v) for v in row] for row in self.correction]}

    @classmethod
    def from_json(cls, doc: Any) -> "ToeplitzElement":
        if isinstance(doc, str):
            named = _named(doc)
            if named is not None:
                return named
            doc = json.loads(doc)
        sym = {int(d): Fraction(v) for d, v in doc.get("symbol", {}).items()}
        return cls.make(sym, [[Fraction(v) for v in row] for row in doc.get("correction", [])])

    def __str__(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)


def _dense(entries: Mapping[tuple[int, int], Fraction]) -> tuple[tuple[Fraction, ...], ...]:
    nz = {ij: v for ij, v in entries.items() if v}
    if not nz:
        return ()
    m = 1 + max(max(i, j) for i, j in nz)
    return tuple(tuple(nz.get((i, j), F0) for j in range(m)) for i in range(m))


def shift() -> ToeplitzElement:
    """The forward shift S (ones on the subdiagonal)."""
    return ToeplitzElement.make({-1: 1})


def backward_shift() -> ToeplitzElement:
    """S*, ones on the superdiagonal."""
    return ToeplitzElement.make({1: 1})


def identity() -> ToeplitzElement:
    return ToeplitzElement.make({0: 1})


def matrix_unit(i: int, j: int) -> ToeplitzElement:
    return ToeplitzElement.make(None, {(i, j): 1})


def _named(name: str) -> ToeplitzElement | None:
    key = name.strip()
    if key == "S":
        return shift()
    if key in ("S*", "S^*"):
        return backward_shift()
    if key in ("1", "I"):
        return identity()
    if key == "0":
        return ToeplitzElement.make()
    if key.startswith("E_"):
        parts = key[2:].split("_")
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return matrix_unit(int(parts[0]), int(parts[1]))
    return None


def add(a: ToeplitzElement, b: ToeplitzElement) -> ToeplitzElement:
    sym = a.symbol_map
    for d, v in b.symbol:
        sym[d] = sym.get(d, F0) + v
    corr: dict[tuple[int, int], Fraction] = {}
    for src in (a.correction, b.correction):
        for i, row in enumerate(src):
            for j, v in enumerate(row):
                if v:
                    corr[(i, j)] = corr.get((i, j), F0) + v
    return ToeplitzElement.make(sym, corr)


def scale(a: ToeplitzElement, s) -> ToeplitzElement:
    s = Fraction(s)
    return ToeplitzElement.make({d: s * v for d, v in a.symbol},
                                [[s * v for v in row] for row in a.correction])


def negate(a: ToeplitzElement) -> ToeplitzElement:
    return scale(a, -1)


def transpose(a: ToeplitzElement) -> ToeplitzElement:
    return ToeplitzElement.make({-d: v for d, v in a.symbol},
                                [list(col) for col in zip(*a.correction)])


def support_bound(a: ToeplitzElement, b: ToeplitzElement) -> int:
    """Side of the top-left block outside which ``ab - T(symbol product)`` vanishes."""
    return a.corr_size + b.corr_size + a.bandwidth + b.bandwidth


def multiply(a: ToeplitzElement, b: ToeplitzElement) -> ToeplitzElement:
    """Exact operator product.

    The symbol is the Laurent-polynomial product; the correction is read off
    a truncated dense product one row and column beyond the support bound,
    and that extra border is checked to be zero.
    """
    sym_a, sym_b = a.symbol_map, b.symbol_map
    sym: dict[int, Fraction] = {}
    for da, va in sym_a.items():
        for db, vb in sym_b.items():
            sym[da + db] = sym.get(da + db, F0) + va * vb
    n = support_bound(a, b) + 1
    reach = n + a.bandwidth + b.bandwidth + max(a.corr_size, b.corr_size) + 1
    A = a.corner(reach)
    B = b.corner(reach)
    corr: dict[tuple[int, int], Fraction] = {}
    for i in range(n):
        Ai = A[i]
        for j in range(n):
            acc = F0
            for k in range(reach):
                if Ai[k] and B[k][j]:
                    acc += Ai[k] * B[k][j]
            acc -= sym.get(j - i, F0)
            if acc:
                if i == n - 1 or j == n - 1:
                    raise InternalInconsistency(
                        f"correction escapes support bound {n - 1} at ({i}, {j})")
                corr[(i, j)] = acc
    return ToeplitzElement.make(sym, corr)


def solve_linear(terms: Sequence[tuple[ToeplitzElement, ToeplitzElement]],
                 rhs: ToeplitzElement, band_bound: int = 4,
                 corr_bound: int = 4) -> ToeplitzElement | None:
    """Some bounded x with ``sum(l x r) == rhs``, or None if none is bounded.

    None does not prove that no solution exists outside the bounds.
    """
    if band_bound < 0 or corr_bound < 0:
        raise ValueError("bounds must be >= 0")
    basis: list[ToeplitzElement] = [ToeplitzElement.make({d: 1})
                                    for d in range(-band_bound, band_bound + 1)]
    basis += [matrix_unit(i, j) for i in range(corr_bound) for j in range(corr_bound)]
    images = []
    for u in basis:
        img = ToeplitzElement.make()
        for l, r in terms:
            img = add(img, multiply(multiply(l, u), r))
        images.append(img)
    coords: set = set()
    for e in images + [rhs]:
        coords.update(("s", d) for d, _ in e.symbol)
        coords.update(("c", i, j) for i, row in enumerate(e.correction)
                      for j, v in enumerate(row) if v)
    order = sorted(coords, key=lambda c: (c[0], c[1:]))

    def coord(e: ToeplitzElement, c) -> Fraction:
        if c[0] == "s":
            return e.symbol_map.get(c[1], F0)
        _, i, j = c
        return e.correction[i][j] if i < e.corr_size and j < e.corr_size else F0

    if not order:
        return ToeplitzElement.make()
    matrix = [[coord(img, c) for img in images] for c in order]
    b = [coord(rhs, c) for c in order]
    sol = linalg.solve(matrix, b, F0, F1)
    if sol is None:
        return None
    x = ToeplitzElement.make()
    for coef, u in zip(sol, basis):
        if coef:
            x = add(x, scale(u, coef))
    return x


class ToeplitzRing(StarRing):
    """Banded Toeplitz-plus-finite-rank operators with the transpose involution."""

    capabilities = frozenset({Capability.LINEAR_SOLVABLE})
    exact_solve = False

    def __init__(self, band_bound: int = 4, corr_bound: int = 4):
        self.band_bound = band_bound
        self.corr_bound = corr_bound
        self.ring_id = "Toeplitz(Q)"
        self._zero_e = ToeplitzElement.make()
        self._one_e = identity()

    def _add(self, u, v): return add(u, v)
    def _neg(self, u): return negate(u)
    def _mul(self, u, v): return multiply(u, v)
    def _star(self, u): return transpose(u)
    def _zero(self): return self._zero_e
    def _one(self): return self._one_e

    def encode_value(self, u: ToeplitzElement) -> Any:
        return u.to_json()

    def decode_value(self, doc: Any) -> ToeplitzElement:
        if isinstance(doc, ToeplitzElement):
            return doc
        if isinstance(doc, (int, Fraction)) and not isinstance(doc, bool):
            return ToeplitzElement.make({0: doc})   # scalar multiple of 1
        try:
            return ToeplitzElement.from_json(doc)
        except (ValueError, KeyError, TypeError, AttributeError) as exc:
            raise InvalidElement(f"bad Toeplitz element {doc!r}: {exc}") from None

    def spec(self) -> dict:
        return {"kind": "Toeplitz", "band_bound": self.band_bound,
                "corr_bound": self.corr_bound, "involution": "transpose"}

    @property
    def S(self) -> Element:
        return Element(self, shift())

    @property
    def S_star(self) -> Element:
        return Element(self, backward_shift())

    def E(self, i: int, j: int) -> Element:
        return Element(self, matrix_unit(i, j))

    def random_element(self, rng: random.Random) -> Element:
        sym = {d: rng.randint(-2, 2) for d in range(-2, 3) if rng.random() < 0.5}
        m = rng.randint(0, 2)
        corr = [[rng.randint(-1, 1) for _ in range(m)] for _ in range(m)]
        return Element(self, ToeplitzElement.make(sym, corr))

    def solve(self, terms, rhs) -> Element | None:
        for l, r in terms:
            self.check(l)
            self.check(r)
        self.check(rhs)
        x = solve_linear([(l.value, r.value) for l, r in terms], rhs.value,
                         self.band_bound, self.corr_bound)
        return None if x is None else Element(self, x)


def verify_witness(a: Element, x: Element, kind: InverseKind, k: int = 1,
                   aux: tuple[Element, Element] | None = None) -> bool:
    """True iff every defining equation of ``kind`` holds exactly."""
    return satisfies(kind, a, x, k, aux)
