"""Hot loops over finite-ring tables.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
pure-Python twin in ``_pykernels`` takes over.  Setting ``GINV_PURE_PYTHON=1``
forces the fallback.  :data:`BACKEND` names the active implementation.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from ginv._kernels import _pykernels

try:
    if os.environ.get("GINV_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python kernels requested")
    from ginv._kernels import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

KIND_CODES = {
    "inner": _pykernels.INNER, "one-three": _pykernels.ONE_THREE,
    "one-four": _pykernels.ONE_FOUR, "mp": _pykernels.MP, "group": _pykernels.GROUP,
    "drazin": _pykernels.DRAZIN, "core": _pykernels.CORE,
    "dual-core": _pykernels.DUAL_CORE, "right-core": _pykernels.RIGHT_CORE,
    "left-core": _pykernels.LEFT_CORE, "pseudo-core": _pykernels.PSEUDO_CORE,
    "right-pseudo-core": _pykernels.RIGHT_PSEUDO_CORE,
    "right-inverse": _pykernels.RIGHT_INVERSE, "left-inverse": _pykernels.LEFT_INVERSE,
    "ep": _pykernels.EP, "bc": _pykernels.BC, "left-bc": _pykernels.LEFT_BC,
    "right-bc": _pykernels.RIGHT_BC,
}


@dataclass
class Tables:
    """Operation tables of a finite ring, in both numpy and list form."""

    mul: np.ndarray
    add: np.ndarray
    star: np.ndarray
    zero: int
    one: int
    mul_l: list = field(init=False, repr=False)
    add_l: list = field(init=False, repr=False)
    star_l: list = field(init=False, repr=False)

    def __post_init__(self):
        self.mul = np.ascontiguousarray(self.mul, dtype=np.intc)
        self.add = np.ascontiguousarray(self.add, dtype=np.intc)
        self.star = np.ascontiguousarray(self.star, dtype=np.intc)
        self.mul_l = self.mul.tolist()
        self.add_l = self.add.tolist()
        self.star_l = self.star.tolist()

    @property
    def size(self) -> int:
        return self.mul.shape[0]


class Kernels:
    """One implementation of the kernel API bound to a module."""

    def __init__(self, module, name: str):
        self._m = module
        self.name = name
        self._compiled = module is _ckernels

    def search(self, code: int, a: int, k: int, b: int, c: int, t: Tables,
               first: bool = False) -> list[int]:
        if self._compiled:
            return self._m.search(code, a, k, b, c, t.mul, t.star, t.one, first)
        return self._m.search(code, a, k, b, c, t.mul_l, t.star_l, t.one, first)

    def solve_terms(self, lefts: list[int], rights: list[int], rhs: int, t: Tables,
                    first: bool = True) -> list[int]:
        if self._compiled:
            return self._m.solve_terms(np.asarray(lefts, dtype=np.intc),
                                       np.asarray(rights, dtype=np.intc),
                                       rhs, t.mul, t.add, t.zero, first)
        return self._m.solve_terms(lefts, rights, rhs, t.mul_l, t.add_l, t.zero, first)

    def one_sided_inverses(self, t: Tables, right: bool) -> list[int]:
        if self._compiled:
            return self._m.one_sided_inverses(t.mul, t.one, right)
        return self._m.one_sided_inverses(t.mul_l, t.one, right)


PYTHON = Kernels(_pykernels, "python")
COMPILED = Kernels(_ckernels, "cython") if _ckernels is not None else None
ACTIVE = COMPILED or PYTHON


def available() -> list[Kernels]:
    return [k for k in (COMPILED, PYTHON) if k is not None]
