"""Relation schema between element classes, audited over concrete rings.

Membership of each audited element in each class is decided by exhaustive
kernel search in enumerable rings and by the construction routes elsewhere.
Bounded misses in the Toeplitz ring are resolved from certificates that were
found, or through the one-sided unit obstruction, and stay unresolved
otherwise.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Any, Sequence

from ginv.finite import FiniteRing
from ginv.gen_inverse import Status, compute, one_sided_obstruction
from ginv.kinds import InverseKind
from ginv.matrices import MatrixRing
from ginv.ring import Element, StarRing
from ginv.toeplitz import ToeplitzRing
from ginv.verifier.context import EvalContext

K = InverseKind


class ElementClass(enum.Enum):
    INVERTIBLE = "Invertible"
    EP = "EP"
    CORE = "Core"
    DUAL_CORE = "DualCore"
    RIGHT_CORE = "RightCore"
    PSEUDO_CORE = "PseudoCore"
    RIGHT_PSEUDO_CORE = "RightPseudoCore"
    GROUP = "Group"
    DRAZIN = "Drazin"
    MP = "MP"
    ONE_THREE = "OneThree"


C = ElementClass
CLASSES = tuple(ElementClass)

_KIND = {C.EP: K.EP, C.CORE: K.CORE, C.DUAL_CORE: K.DUAL_CORE, C.RIGHT_CORE: K.RIGHT_CORE,
         C.PSEUDO_CORE: K.PSEUDO_CORE, C.RIGHT_PSEUDO_CORE: K.RIGHT_PSEUDO_CORE,
         C.GROUP: K.GROUP, C.DRAZIN: K.DRAZIN, C.MP: K.MP, C.ONE_THREE: K.ONE_THREE}

# classes ruled out by a one-sided unit (a r = 1, r a != 1) and its mirror image
_NOT_IF_RIGHT_UNIT = {C.INVERTIBLE, C.GROUP, C.DRAZIN, C.CORE, C.DUAL_CORE, C.PSEUDO_CORE, C.EP}
_NOT_IF_LEFT_UNIT = _NOT_IF_RIGHT_UNIT | {C.RIGHT_CORE, C.RIGHT_PSEUDO_CORE}

#: number of seeded random elements audited in each exact matrix ring
MATRIX_SAMPLES = 24
SAMPLE_SEED = 0


@dataclass(frozen=True)
class Audited:
    ring_id: str
    label: str
    member: tuple[tuple[ElementClass, bool | None], ...]

    def get(self, cls: ElementClass) -> bool | None:
        return dict(self.member)[cls]


@dataclass(frozen=True)
class Edge:
    source: ElementClass
    target: ElementClass
    witnesses: int
    unresolved: int


@dataclass(frozen=True)
class Separation:
    """A member of ``source`` outside ``target``, first one per ring."""

    source: ElementClass
    target: ElementClass
    examples: tuple[tuple[str, str], ...]   # (ring_id, element label)
    count: int


@dataclass
class RelationSchema:
    rings: tuple[str, ...]
    elements_audited: int
    edges: list[Edge] = field(default_factory=list)
    separations: list[Separation] = field(default_factory=list)

    def has_edge(self, a: ElementClass, b: ElementClass) -> bool:
        return any(e.source is a and e.target is b for e in self.edges)

    def separation(self, a: ElementClass, b: ElementClass) -> Separation | None:
        for s in self.separations:
            if s.source is a and s.target is b:
                return s
        return None

    def to_json(self) -> dict[str, Any]:
        return {
            "rings": list(self.rings),
            "elements_audited": self.elements_audited,
            "nodes": [c.value for c in CLASSES],
            "edges": [{"from": e.source.value, "to": e.target.value,
                       "witnesses": e.witnesses, "unresolved": e.unresolved}
                      for e in self.edges],
            "separations": [{"from": s.source.value, "to": s.target.value, "count": s.count,
                             "examples": [{"ring_id": r, "element": el}
                                          for r, el in s.examples]}
                            for s in self.separations],
        }


# -- membership ------------------------------------------------------------------

def _label(e: Element) -> str:
    if isinstance(e.ring, MatrixRing):
        return str(e.value)
    return str(e)


def _finite_membership(ctx: EvalContext, a: Element) -> dict[ElementClass, bool | None]:
    ring = ctx.ring
    assert isinstance(ring, FiniteRing)
    out: dict[ElementClass, bool | None] = {
        C.INVERTIBLE: bool(ring.right_inverse_table[a.value] >= 0
                           and ring.left_inverse_table[a.value] >= 0)}
    for cls, kind in _KIND.items():
        if kind.indexed:
            out[cls] = ctx.least_index(kind, a) is not None
        else:
            out[cls] = ctx.has(kind, a)
    return out


def _certified_exclusions(a: Element, out: dict[ElementClass, bool | None]) -> None:
    """Rule classes out from certificates that were found.

    A unit's Moore-Penrose inverse is its inverse, so a certified x with
    ax != 1 or xa != 1 shows a is not a unit.  A certified Drazin inverse d
    with ada != a has index at least 2, which excludes the group inverse and
    everything implying it, including right core invertibility (aR = a^2R
    together with a Drazin inverse forces index at most 1).
    """
    one = a.ring.one
    mp = compute(K.MP, a)
    if out[C.INVERTIBLE] is None and mp.certificate is not None:
        x = mp.certificate.witness
        if a * x != one or x * a != one:
            out[C.INVERTIBLE] = False
    dr = compute(K.DRAZIN, a)
    if dr.certificate is not None:
        d = dr.certificate.witness
        if a * d * a != a:
            for cls in (C.INVERTIBLE, C.GROUP, C.CORE, C.DUAL_CORE, C.EP, C.RIGHT_CORE):
                if out[cls] is None:
                    out[cls] = False


def _route_membership(a: Element) -> dict[ElementClass, bool | None]:
    def status(kind: InverseKind) -> bool | None:
        st = compute(kind, a).status
        return {Status.FOUND: True, Status.NOT_FOUND: False}.get(st)

    out: dict[ElementClass, bool | None] = {cls: status(kind) for cls, kind in _KIND.items()}
    r, l = status(K.RIGHT_INVERSE), status(K.LEFT_INVERSE)
    out[C.INVERTIBLE] = (False if r is False or l is False
                         else True if r and l else None)
    if any(v is None for v in out.values()):
        _certified_exclusions(a, out)
    if any(v is None for v in out.values()):
        side = one_sided_obstruction(a)
        ruled_out = {"right": _NOT_IF_RIGHT_UNIT, "left": _NOT_IF_LEFT_UNIT}.get(side, set())
        for cls in ruled_out:
            if out[cls] is None:
                out[cls] = False
    return out


def _named_elements(ring: StarRing) -> list[tuple[str, Element]]:
    if isinstance(ring, ToeplitzRing):
        one, S, T = ring.one, ring.S, ring.S_star
        e00 = ring.E(0, 0)
        items = [("0", ring.zero), ("1", one), ("S", S), ("S*", T), ("S^2", S * S),
                 ("S*^2", T * T), ("E_0_0", e00), ("1-E_0_0", one - e00),
                 ("S E_0_0", S * e00), ("E_0_0 S*", e00 * T), ("2S*", T + T)]
        return items
    if isinstance(ring, MatrixRing):
        n = ring.size
        rng = random.Random(SAMPLE_SEED)
        items = []
        if n == 2:
            for m in ([[0, 1], [0, 0]], [[1, 1], [0, 0]], [[1, 0], [0, 0]], [[1, 0], [0, 1]],
                      [[0, 0], [0, 0]], [[1, "i"], [0, 0]], [[1, 0], [1, 0]]):
                e = ring.element(m)
                items.append((_label(e), e))
        for _ in range(MATRIX_SAMPLES):
            e = ring.random_element(rng)
            items.append((_label(e), e))
        return items
    raise TypeError(f"no audit set for {ring.ring_id}")


def audit(ring: StarRing) -> list[Audited]:
    """Class membership of every audited element of ``ring``."""
    out = []
    if isinstance(ring, FiniteRing):
        ctx = EvalContext(ring)
        for a in ctx.elements:
            m = _finite_membership(ctx, a)
            out.append(Audited(ring.ring_id, _label(a), tuple((c, m[c]) for c in CLASSES)))
        return out
    for label, a in _named_elements(ring):
        m = _route_membership(a)
        out.append(Audited(ring.ring_id, label, tuple((c, m[c]) for c in CLASSES)))
    return out


def build_relation_schema(rings: Sequence[StarRing],
                          audits: Sequence[list[Audited]] | None = None) -> RelationSchema:
    """Implications between classes backed by zero counterexamples.

    An edge A -> B needs at least one element in both classes and no audited
    element in A but provably outside B.  Every pair with a separating
    element becomes a recorded separation instead.
    """
    if not rings:
        raise ValueError("at least one ring must be audited")
    if audits is None:
        audits = [audit(r) for r in rings]
    rows = [row for rs in audits for row in rs]
    schema = RelationSchema(tuple(r.ring_id for r in rings), len(rows))
    for a in CLASSES:
        for b in CLASSES:
            if a is b:
                continue
            witnesses = unresolved = count = 0
            examples: dict[str, str] = {}
            for row in rows:
                va, vb = row.get(a), row.get(b)
                if va is None or (va and vb is None):
                    unresolved += 1
                elif va and vb:
                    witnesses += 1
                elif va and vb is False:
                    count += 1
                    examples.setdefault(row.ring_id, row.label)
            if count:
                schema.separations.append(Separation(a, b, tuple(examples.items()), count))
            elif witnesses:
                schema.edges.append(Edge(a, b, witnesses, unresolved))
    return schema
