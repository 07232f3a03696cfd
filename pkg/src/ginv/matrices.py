"""Exact square matrices over Q(i) and their classical generalized inverses.

The Moore-Penrose inverse comes from a full-rank factorization read off the
reduced row echelon form; the Drazin inverse from rank stabilization and the
formula ``a^D = a^k (a^(2k+1))^- a^k``.  Everything is exact.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from ginv import linalg
from ginv.errors import InvalidElement
from ginv.gaussian import ONE, ZERO, GaussianRational
from ginv.ring import Capability, Element, StarRing


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[GaussianRational, ...], ...]

    @classmethod
    def of(cls, data: Iterable[Iterable[Any]]) -> "ExactMatrix":
        ent = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in data)
        if not ent or any(len(r) != len(ent[0]) for r in ent) or not ent[0]:
            raise ValueError("matrix rows must be nonempty and of equal length")
        return cls(len(ent), len(ent[0]), ent)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.of([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        return cls.of([[ZERO] * (cols or rows) for _ in range(rows)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, tuple(
            tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols,
                           tuple(tuple(-x for x in r) for r in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = ZERO
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def scale(self, s) -> "ExactMatrix":
        s = GaussianRational.coerce(s)
        return ExactMatrix(self.rows, self.cols,
                           tuple(tuple(s * x for x in r) for r in self.entries))

    def __pow__(self, n: int) -> "ExactMatrix":
        if not self.is_square or n < 0:
            raise ValueError("powers need a square matrix and n >= 0")
        acc = ExactMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                acc = acc @ base
            n >>= 1
            if n:
                base = base @ base
        return acc

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    @property
    def H(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return ExactMatrix(self.cols, self.rows,
                           tuple(tuple(x.conjugate() for x in c) for c in zip(*self.entries)))

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def rank(self) -> int:
        return linalg.rank(self.entries, ZERO, ONE)

    def inverse(self) -> "ExactMatrix | None":
        inv = linalg.inverse(self.entries, ZERO, ONE)
        return None if inv is None else ExactMatrix.of(inv)

    def submatrix_cols(self, cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix.of([[r[c] for c in cols] for r in self.entries])

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[str(x) for x in r] for r in self.entries]}

    @classmethod
    def from_json(cls, doc: Any) -> "ExactMatrix":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if isinstance(doc, list):
            return cls.of(doc)
        m = cls.of(doc["entries"])
        if (m.rows, m.cols) != (doc.get("rows", m.rows), doc.get("cols", m.cols)):
            raise ValueError("declared shape does not match entries")
        return m

    def _same_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]"
                              for r in self.entries) + "]"


@dataclass(frozen=True)
class DrazinResult:
    inverse: ExactMatrix
    index: int


def full_rank_factorization(a: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix] | None:
    """``a = F G`` with F of full column rank and G of full row rank.

    G is the nonzero part of the reduced row echelon form and F the pivot
    columns of ``a``.  Returns None for the zero matrix.
    """
    red, pivots = linalg.rref(a.entries, ZERO, ONE)
    if not pivots:
        return None
    g = ExactMatrix.of(red[:len(pivots)])
    f = a.submatrix_cols(pivots)
    return f, g


def mp_inverse(a: ExactMatrix) -> ExactMatrix:
    """Moore-Penrose inverse ``G*(GG*)^-1 (F*F)^-1 F*``."""
    frf = full_rank_factorization(a)
    if frf is None:
        return ExactMatrix.zeros(a.cols, a.rows)
    f, g = frf
    ggh_inv = (g @ g.H).inverse()
    fhf_inv = (f.H @ f).inverse()
    assert ggh_inv is not None and fhf_inv is not None
    return g.H @ ggh_inv @ fhf_inv @ f.H


def inner_inverse(a: ExactMatrix) -> ExactMatrix:
    """Some x with ``a x a = a``, from row reduction.

    With ``a = F G`` and G in reduced echelon form, the pivot selector E has
    ``G E = I``; combined with the left inverse of F this gives ``E F^L``.
    """
    red, pivots = linalg.rref(a.entries, ZERO, ONE)
    if not pivots:
        return ExactMatrix.zeros(a.cols, a.rows)
    f = a.submatrix_cols(pivots)
    left = (f.H @ f).inverse()
    assert left is not None
    f_left = left @ f.H
    sel = ExactMatrix.of([[ONE if pivots[j] == i else ZERO for j in range(len(pivots))]
                          for i in range(a.cols)])
    return sel @ f_left


def drazin_index(a: ExactMatrix) -> int:
    """Least k with ``rank(a^k) == rank(a^(k+1))``."""
    if not a.is_square:
        raise ValueError("Drazin index needs a square matrix")
    k, power, r = 0, ExactMatrix.identity(a.rows), a.rows
    while True:
        nxt = power @ a
        r_next = nxt.rank()
        if r_next == r:
            return k
        k, power, r = k + 1, nxt, r_next


def drazin_inverse(a: ExactMatrix) -> DrazinResult:
    k = drazin_index(a)
    ak = a ** k
    mid = inner_inverse(a ** (2 * k + 1))
    return DrazinResult(ak @ mid @ ak, k)


def group_inverse(a: ExactMatrix) -> ExactMatrix | None:
    res = drazin_inverse(a)
    return res.inverse if res.index <= 1 else None


def one_three_inverse(a: ExactMatrix) -> ExactMatrix:
    """Default {1,3}-inverse: the Moore-Penrose inverse."""
    return mp_inverse(a)


def one_three_via_gram(a: ExactMatrix) -> ExactMatrix | None:
    """Solve ``a = t a* a`` for t and return ``t*`` (None if unsolvable)."""
    n = a.rows
    gram = a.H @ a
    # t gram = a  <=>  gram^H t^H = a^H, solved column by column
    cols = []
    rhs = a.H
    for j in range(n):
        col = linalg.solve(gram.H.entries, [rhs[i, j] for i in range(gram.rows)], ZERO, ONE)
        if col is None:
            return None
        cols.append(col)
    t_h = ExactMatrix.of([[cols[j][i] for j in range(n)] for i in range(gram.cols)])
    return t_h   # t* itself


def random_matrix(rng: random.Random, size: int, *, complex_entries: bool = False,
                  rank: int | None = None, max_num: int = 3, max_den: int = 3) -> ExactMatrix:
    """Seeded random exact matrix; ``rank`` forces a product of thin factors."""

    def entry():
        re = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        im = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)) \
            if complex_entries and rng.random() < 0.5 else 0
        return GaussianRational(re, im)

    if rank is None or rank >= size:
        return ExactMatrix.of([[entry() for _ in range(size)] for _ in range(size)])
    if rank == 0:
        return ExactMatrix.zeros(size)
    left = ExactMatrix.of([[entry() for _ in range(rank)] for _ in range(size)])
    right = ExactMatrix.of([[entry() for _ in range(size)] for _ in range(rank)])
    return left @ right


# -- ring backend -------------------------------------------------------------

_INVOLUTIONS = ("conjugate-transpose", "transpose")


class MatrixRing(StarRing):
    """``M_n(Q(i))`` with conjugate-transpose (default) or transpose."""

    capabilities = frozenset({Capability.LINEAR_SOLVABLE, Capability.RANK_COMPUTABLE})
    exact_solve = True

    def __init__(self, size: int, involution: str = "conjugate-transpose"):
        if size < 1:
            raise ValueError("size must be positive")
        if involution not in _INVOLUTIONS:
            raise ValueError(f"involution must be one of {_INVOLUTIONS}")
        self.size = size
        self.involution = involution
        suffix = "" if involution == "conjugate-transpose" else "^T"
        self.ring_id = f"M{size}(Q(i)){suffix}"
        self._zero_m = ExactMatrix.zeros(size)
        self._one_m = ExactMatrix.identity(size)

    def _add(self, u, v): return u + v
    def _neg(self, u): return -u
    def _mul(self, u, v): return u @ v
    def _star(self, u): return u.H if self.involution == "conjugate-transpose" else u.T
    def _zero(self): return self._zero_m
    def _one(self): return self._one_m

    def encode_value(self, u: ExactMatrix) -> Any:
        return u.to_json()

    def decode_value(self, doc: Any) -> ExactMatrix:
        if isinstance(doc, ExactMatrix):
            m = doc
        else:
            try:
                m = ExactMatrix.from_json(doc)
            except (ValueError, KeyError, TypeError) as exc:
                raise InvalidElement(f"bad matrix document {doc!r}: {exc}") from None
        if (m.rows, m.cols) != (self.size, self.size):
            raise InvalidElement(f"expected a {self.size}x{self.size} matrix")
        return m

    def spec(self) -> dict:
        return {"kind": "MatQ(i)", "size": self.size, "involution": self.involution}

    def default_kmax(self) -> int:
        return self.size

    def random_element(self, rng: random.Random) -> Element:
        size = self.size
        rank = rng.randint(0, size)
        return Element(self, random_matrix(rng, size, complex_entries=True, rank=rank))

    def solve(self, terms, rhs) -> Element | None:
        n = self.size
        for l, r in terms:
            self.check(l)
            self.check(r)
        self.check(rhs)
        # unknown x[p][q] at column p*n+q; equation (i, j)
        coeff = [[ZERO] * (n * n) for _ in range(n * n)]
        for l, r in terms:
            L, R = l.value, r.value
            for i in range(n):
                for p in range(n):
                    lip = L[i, p]
                    if not lip:
                        continue
                    for q in range(n):
                        for j in range(n):
                            rqj = R[q, j]
                            if rqj:
                                coeff[i * n + j][p * n + q] += lip * rqj
        b = [rhs.value[i, j] for i in range(n) for j in range(n)]
        sol = linalg.solve(coeff, b, ZERO, ONE)
        if sol is None:
            return None
        return Element(self, ExactMatrix.of([sol[i * n:(i + 1) * n] for i in range(n)]))

    # closed-form routes used by the generic algorithms
    def _conj_ok(self, m: ExactMatrix) -> bool:
        return self.involution == "conjugate-transpose" or all(
            x.is_real for r in m.entries for x in r)

    def mp_route(self, a: Element) -> Element | None:
        return Element(self, mp_inverse(a.value)) if self._conj_ok(a.value) else None

    def drazin_route(self, a: Element) -> tuple[Element, int]:
        res = drazin_inverse(a.value)
        return Element(self, res.inverse), res.index

    def group_route(self, a: Element) -> Element | None:
        g = group_inverse(a.value)
        return None if g is None else Element(self, g)

    def one_three_route(self, a: Element) -> Element | None:
        return self.mp_route(a)
