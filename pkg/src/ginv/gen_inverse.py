"""Constructions of generalized inverses, generic over any solvable *-ring.

Every public function builds a candidate from an explicit formula and then
replays the kind's defining equations through :mod:`ginv.certificate`, so a
returned certificate is always verified.  The ingredients (a {1,3}-inverse,
a solution of ``a = a^2 t``, a right inverse of ``p + a^n`` ...) come from
``ring.solve``; matrix rings contribute closed-form shortcuts through their
``*_route`` hooks.

Construction routes recorded on certificates:

======================  ======================================================
route                   formula
======================  ======================================================
regularity-solve        x solves axa = a
gram-solve              a = t a*a, x = t*
gram-solve-dual         a = a a* s, x = s*
mp-formula              closed form from a full-rank factorization
one-four-a-one-three    a^(1,4) a a^(1,3)
ideal-factors           a = s a^2 = a^2 t, a# = s a t
power-inner             a^D = a^k (a^(2k+1))^- a^k, k = ind(a)
group-a-one-three       a# a a^(1,3)
core-of-adjoint         ((a*)#)*, the involution dual
projection-unit         p = 1 - a a^(1,3), a = a^2 t,
                        x = (1 + a t a^(1,3) - a t)(1 - p)
right-core-of-adjoint   (right core of a*)*
drazin-power-one-three  a^D a^k (a^k)^(1,3)
power-ideal-one-three   a^k = a^(k+1) z, x = a^k z (a^k)^(1,3)
mp-equals-group         a^dagger, accepted when it equals a#
witness-square          x^2 a from a witness of xa^2=a, (xa)*=xa, x^k=ax^(k+1)
bc-solve                two-sided (b,c) from s cab = b and cab t = c
left-bc-solve           s cab = b, x = s c
right-bc-solve          cab t = c, z = b t
unit-solve              ax = 1 or xa = 1
zero                    a = 0
======================  ======================================================
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable

from ginv.certificate import InverseCertificate, certify, try_certify
from ginv.errors import (HypothesisNotMet, InternalInconsistency, NotAProjection,
                         PreconditionFailed, Unsupported)
from ginv.finite import oracle_search
from ginv.kinds import InverseKind
from ginv.ring import (Capability, Element, PeirceBlocks, Projection, Side, StarRing,
                       peirce_decompose)

K = InverseKind


class Status(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    UNKNOWN = "unknown-at-bound"


@dataclass(frozen=True)
class Outcome:
    """Result of :func:`compute`: a certificate or the reason there is none."""

    kind: InverseKind
    status: Status
    certificate: InverseCertificate | None = None
    reason: str = ""

    def to_json(self) -> dict[str, Any]:
        if self.certificate is not None:
            doc = self.certificate.to_json()
            doc["status"] = self.status.value
            return doc
        return {"kind": self.kind.value, "status": self.status.value, "reason": self.reason}


class _Trace:
    """First failure reason along a construction, and whether it is a proof."""

    def __init__(self):
        self.reason: str | None = None
        self.exact = True

    def miss(self, ring: StarRing, reason: str) -> None:
        if self.reason is None:
            self.reason = reason if ring.exact_solve else f"{reason} (not decided: bounded search)"
        if not ring.exact_solve:
            self.exact = False

    def status(self) -> Status:
        return Status.NOT_FOUND if self.exact else Status.UNKNOWN


def _solve(ring: StarRing, terms, rhs: Element, tr: _Trace, reason: str) -> Element | None:
    if not ring.can_solve():
        raise Unsupported(f"{ring.ring_id} cannot solve linear equations")
    x = ring.solve(terms, rhs)
    if x is None:
        tr.miss(ring, reason)
    return x


def _hook(ring: StarRing, name: str) -> Callable | None:
    return getattr(ring, name, None)


# -- ingredients --------------------------------------------------------------

def _right_inverse(u: Element, tr: _Trace) -> Element | None:
    ring = u.ring
    return _solve(ring, [(u, ring.one)], ring.one, tr, "not right invertible")


def _left_inverse(u: Element, tr: _Trace) -> Element | None:
    ring = u.ring
    return _solve(ring, [(ring.one, u)], ring.one, tr, "not left invertible")


def _inner(a: Element, tr: _Trace) -> Element | None:
    return _solve(a.ring, [(a, a)], a, tr, "not regular")


def _one_three(a: Element, tr: _Trace) -> tuple[Element, str] | None:
    ring = a.ring
    hook = _hook(ring, "one_three_route")
    if hook is not None:
        x = hook(a)
        if x is not None:
            return x, "mp-formula"
    t = _solve(ring, [(ring.one, a.star * a)], a, tr, "no {1,3}-inverse")
    return None if t is None else (t.star, "gram-solve")


def _one_four(a: Element, tr: _Trace) -> tuple[Element, str] | None:
    ring = a.ring
    hook = _hook(ring, "mp_route")
    if hook is not None:
        x = hook(a)
        if x is not None:
            return x, "mp-formula"
    s = _solve(ring, [(a * a.star, ring.one)], a, tr, "no {1,4}-inverse")
    return None if s is None else (s.star, "gram-solve-dual")


def _mp(a: Element, tr: _Trace) -> tuple[Element, str] | None:
    hook = _hook(a.ring, "mp_route")
    if hook is not None:
        x = hook(a)
        if x is not None:
            return x, "mp-formula"
    r4 = _one_four(a, tr)
    r3 = _one_three(a, tr) if r4 is not None else None
    if r4 is None or r3 is None:
        if tr.exact:
            tr.reason = "no Moore-Penrose inverse"
        return None
    return r4[0] * a * r3[0], "one-four-a-one-three"


def _group(a: Element, tr: _Trace) -> Element | None:
    ring = a.ring
    hook = _hook(ring, "group_route")
    if hook is not None:
        g = hook(a)
        if g is None:
            tr.miss(ring, "no group inverse")
        return g
    a2 = a * a
    t = _solve(ring, [(a2, ring.one)], a, tr, "no group inverse")
    if t is None:
        return None
    s = _solve(ring, [(ring.one, a2)], a, tr, "no group inverse")
    if s is None:
        return None
    return s * a * t


def _drazin(a: Element, k_max: int, tr: _Trace) -> tuple[Element, int] | None:
    ring = a.ring
    hook = _hook(ring, "drazin_route")
    if hook is not None:
        d, index = hook(a)
        if index > k_max:
            tr.miss(ring, f"Drazin index {index} exceeds k_max {k_max}")
            return None
        return d, index
    if not ring.can_solve():
        raise Unsupported(f"{ring.ring_id} cannot solve linear equations")
    for k in range(0, k_max + 1):
        ak = a ** k
        ak1 = ak * a
        # ind(a) <= k iff a^k lies in a^(k+1)R and in Ra^(k+1)
        if ring.solve([(ak1, ring.one)], ak) is None:
            continue
        if ring.solve([(ring.one, ak1)], ak) is None:
            continue
        big = ak * ak1
        y = ring.solve([(big, big)], big)
        if y is None:
            continue
        return ak * y * ak, k
    tr.miss(ring, f"no Drazin inverse with index <= {k_max}")
    return None


# -- unit and one-sided inverses ----------------------------------------------

def _unit(a: Element, side: Side, tr: _Trace) -> InverseCertificate | None:
    if side is Side.RIGHT:
        x = _right_inverse(a, tr)
        return None if x is None else certify(K.RIGHT_INVERSE, a, x, 1, "unit-solve")
    x = _left_inverse(a, tr)
    return None if x is None else certify(K.LEFT_INVERSE, a, x, 1, "unit-solve")


# -- core family ----------------------------------------------------------------

def _core(a: Element, tr: _Trace) -> InverseCertificate | None:
    if a.is_zero():
        return certify(K.CORE, a, a, 1, "zero")
    g = _group(a, tr)
    if g is None:
        return None
    m = _one_three(a, tr)
    if m is None:
        return None
    return certify(K.CORE, a, g * a * m[0], 1, "group-a-one-three")


def _dual_core(a: Element, tr: _Trace) -> InverseCertificate | None:
    c = _core(a.star, tr)
    if c is None:
        return None
    return certify(K.DUAL_CORE, a, c.witness.star, 1, "core-of-adjoint")


def _right_core(a: Element, tr: _Trace) -> InverseCertificate | None:
    ring = a.ring
    if a.is_zero():
        return certify(K.RIGHT_CORE, a, a, 1, "zero")
    m = _one_three(a, tr)
    if m is None:
        return None
    t = _solve(ring, [(a * a, ring.one)], a, tr, "aR differs from a^2R")
    if t is None:
        return None
    a13 = m[0]
    p = ring.one - a * a13
    u_inv = ring.one + a * t * a13 - a * t
    return certify(K.RIGHT_CORE, a, u_inv * (ring.one - p), 1, "projection-unit")


def _left_core(a: Element, tr: _Trace) -> InverseCertificate | None:
    c = _right_core(a.star, tr)
    if c is None:
        return None
    return certify(K.LEFT_CORE, a, c.witness.star, 1, "right-core-of-adjoint")


def _least_index(kind: InverseKind, a: Element, x: Element, start: int, k_max: int,
                 route: str) -> InverseCertificate | None:
    for k in range(start, k_max + 1):
        cert = try_certify(kind, a, x, k, route)
        if cert is not None:
            return cert
    return None


def _pseudo_core(a: Element, k_max: int, tr: _Trace) -> InverseCertificate | None:
    if a.is_zero():
        return certify(K.PSEUDO_CORE, a, a, 1, "zero")
    dr = _drazin(a, k_max, tr)
    if dr is None:
        return None
    d, ind = dr
    for k in range(max(ind, 1), k_max + 1):
        ak = a ** k
        m = _one_three(ak, tr)
        if m is None:
            continue
        x = d * ak * m[0]
        cert = _least_index(K.PSEUDO_CORE, a, x, 1, k_max, "drazin-power-one-three")
        if cert is None:
            raise InternalInconsistency(
                f"pseudo core formula gave {x} for {a}, which fails its equations")
        return cert
    tr.reason = f"no {{1,3}}-inverse of a^k for ind(a) <= k <= {k_max}"
    return None


def _right_pseudo_core(a: Element, k_max: int, tr: _Trace) -> InverseCertificate | None:
    ring = a.ring
    if a.is_zero():
        return certify(K.RIGHT_PSEUDO_CORE, a, a, 1, "zero")
    for k in range(1, k_max + 1):
        ak = a ** k
        m = _one_three(ak, tr)
        if m is None:
            continue
        z = _solve(ring, [(ak * a, ring.one)], ak, tr, "a^kR differs from a^(k+1)R")
        if z is None:
            continue
        return certify(K.RIGHT_PSEUDO_CORE, a, ak * z * m[0], k, "power-ideal-one-three")
    tr.reason = f"no k <= {k_max} with a^k in R^(1,3) and a^kR = a^(k+1)R"
    return None


def _ep(a: Element, tr: _Trace) -> InverseCertificate | None:
    mp = _mp(a, tr)
    if mp is None:
        return None
    g = _group(a, tr)
    if g is None:
        return None
    if mp[0] != g:
        tr.miss(a.ring, "Moore-Penrose and group inverses differ")
        return None
    return certify(K.EP, a, g, 1, "mp-equals-group")


# -- (b, c)-inverses -----------------------------------------------------------

def _bc(a: Element, b: Element, c: Element, side: Side | None,
        tr: _Trace) -> InverseCertificate | None:
    ring = a.ring
    cab = c * a * b
    aux = (b, c)
    if side is Side.LEFT:
        s = _solve(ring, [(ring.one, cab)], b, tr, "b is not in Rcab")
        return None if s is None else certify(K.LEFT_BC, a, s * c, 1, "left-bc-solve", aux)
    t = _solve(ring, [(cab, ring.one)], c, tr, "c is not in cabR")
    if t is None:
        return None
    if side is Side.RIGHT:
        return certify(K.RIGHT_BC, a, b * t, 1, "right-bc-solve", aux)
    s = _solve(ring, [(ring.one, cab)], b, tr, "b is not in Rcab")
    if s is None:
        return None
    return certify(K.BC, a, b * t, 1, "bc-solve", aux)


# -- public API ----------------------------------------------------------------

def compute(kind: InverseKind, a: Element, aux: tuple[Element, Element] | None = None,
            k_max: int | None = None, oracle_fallback: bool = False) -> Outcome:
    """Run the construction route for ``kind`` and classify the result.

    With ``oracle_fallback`` an enumerable ring is searched exhaustively when
    the construction finds nothing; a hit is tagged ``oracle-fallback``.
    """
    ring = a.ring
    if k_max is None:
        k_max = ring.default_kmax()
    if kind.needs_aux and aux is None:
        raise ValueError(f"kind {kind.value} needs an auxiliary (b, c) pair")
    tr = _Trace()
    cert = _dispatch(kind, a, aux, k_max, tr)
    if cert is None and oracle_fallback and Capability.ENUMERABLE in ring.capabilities:
        hit = oracle_search(a, kind, aux, k_max)
        if hit is not None:
            cert = certify(kind, a, hit.witness, hit.index_k, "oracle-fallback", aux)
    if cert is not None:
        return Outcome(kind, Status.FOUND, cert)
    return Outcome(kind, tr.status(), None, tr.reason or f"no {kind.value} inverse")


def _dispatch(kind, a, aux, k_max, tr) -> InverseCertificate | None:
    if kind is K.INNER:
        x = _inner(a, tr)
        return None if x is None else certify(K.INNER, a, x, 1, "regularity-solve")
    if kind is K.ONE_THREE:
        r = _one_three(a, tr)
        return None if r is None else certify(K.ONE_THREE, a, r[0], 1, r[1])
    if kind is K.ONE_FOUR:
        r = _one_four(a, tr)
        return None if r is None else certify(K.ONE_FOUR, a, r[0], 1, r[1])
    if kind is K.MP:
        r = _mp(a, tr)
        return None if r is None else certify(K.MP, a, r[0], 1, r[1])
    if kind is K.GROUP:
        g = _group(a, tr)
        return None if g is None else certify(K.GROUP, a, g, 1, "ideal-factors")
    if kind is K.DRAZIN:
        dr = _drazin(a, k_max, tr)
        return None if dr is None else certify(K.DRAZIN, a, dr[0], dr[1], "power-inner")
    if kind is K.CORE:
        return _core(a, tr)
    if kind is K.DUAL_CORE:
        return _dual_core(a, tr)
    if kind is K.RIGHT_CORE:
        return _right_core(a, tr)
    if kind is K.LEFT_CORE:
        return _left_core(a, tr)
    if kind is K.PSEUDO_CORE:
        return _pseudo_core(a, k_max, tr)
    if kind is K.RIGHT_PSEUDO_CORE:
        return _right_pseudo_core(a, k_max, tr)
    if kind is K.RIGHT_INVERSE:
        return _unit(a, Side.RIGHT, tr)
    if kind is K.LEFT_INVERSE:
        return _unit(a, Side.LEFT, tr)
    if kind is K.EP:
        return _ep(a, tr)
    b, c = aux
    side = {K.BC: None, K.LEFT_BC: Side.LEFT, K.RIGHT_BC: Side.RIGHT}[kind]
    return _bc(a, b, c, side, tr)


def right_core_inverse(a: Element) -> InverseCertificate | None:
    """Right core inverse from a {1,3}-inverse and a solution of ``a = a^2 t``."""
    return _right_core(a, _Trace())


def left_core_inverse(a: Element) -> InverseCertificate | None:
    return _left_core(a, _Trace())


def core_inverse(a: Element) -> InverseCertificate | None:
    """``a# a a^(1,3)`` when both the group and a {1,3}-inverse exist."""
    return _core(a, _Trace())


def dual_core_inverse(a: Element) -> InverseCertificate | None:
    return _dual_core(a, _Trace())


def group_inverse(a: Element) -> InverseCertificate | None:
    return compute(K.GROUP, a).certificate


def drazin_inverse(a: Element, k_max: int | None = None) -> InverseCertificate | None:
    return compute(K.DRAZIN, a, k_max=k_max).certificate


def mp_inverse(a: Element) -> InverseCertificate | None:
    return compute(K.MP, a).certificate


def one_three_inverse(a: Element) -> InverseCertificate | None:
    return compute(K.ONE_THREE, a).certificate


def pseudo_core_inverse(a: Element, k_max: int | None = None) -> InverseCertificate | None:
    """``a^D a^k (a^k)^(1,3)``, certified at the least index k."""
    return _pseudo_core(a, k_max if k_max is not None else a.ring.default_kmax(), _Trace())


def right_pseudo_core_inverse(a: Element, k_max: int | None = None) -> InverseCertificate | None:
    """``a^k z (a^k)^(1,3)`` at the least k with ``a^k = a^(k+1) z`` solvable."""
    return _right_pseudo_core(a, k_max if k_max is not None else a.ring.default_kmax(),
                              _Trace())


def one_sided_bc_inverse(a: Element, b: Element, c: Element,
                         side: Side) -> InverseCertificate | None:
    """Right: z in bR with caz = c.  Left: x in Rc with xab = b."""
    return _bc(a, b, c, side, _Trace())


def bc_inverse(a: Element, b: Element, c: Element) -> InverseCertificate | None:
    return _bc(a, b, c, None, _Trace())


def right_core_via_projection(a: Element, p: Projection | Element,
                              n: int = 1) -> InverseCertificate | None:
    """Right core inverse from a projection p with ``pa = 0``.

    Needs a right inverse of ``u = p + a^n``; then ``x = u_r^{-1}(1 - p)`` for
    ``n = 1`` and ``x = a^(n-1) u_r^{-1}`` for ``n >= 2``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pe = p.element if isinstance(p, Projection) else Projection(p).element
    ring = a.ring
    if not (pe * a).is_zero():
        raise PreconditionFailed("pa != 0")
    u = pe + a ** n
    r = _right_inverse(u, _Trace())
    if r is None:
        return None
    if n == 1:
        return certify(K.RIGHT_CORE, a, r * (ring.one - pe), 1, "projection-unit-n1")
    return certify(K.RIGHT_CORE, a, a ** (n - 1) * r, 1, f"projection-unit-n{n}")


def right_core_via_complement(a: Element, p: Projection | Element,
                              n: int = 1) -> InverseCertificate | None:
    """Same as above through ``w = a^n (1 - p) + p``: ``x = a^(n-1)(1 - p) w_r^{-1}``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pe = p.element if isinstance(p, Projection) else Projection(p).element
    ring = a.ring
    if not (pe * a).is_zero():
        raise PreconditionFailed("pa != 0")
    q = ring.one - pe
    w = a ** n * q + pe
    r = _right_inverse(w, _Trace())
    if r is None:
        return None
    return certify(K.RIGHT_CORE, a, a ** (n - 1) * q * r, 1, f"complement-unit-n{n}")


def spectral_idempotent(cert: InverseCertificate) -> Projection:
    """``a^pi = 1 - a x``; a projection annihilating a from the left."""
    if cert.kind not in (K.RIGHT_CORE, K.CORE):
        raise ValueError(f"spectral idempotent needs a right-core or core certificate, "
                         f"not {cert.kind.value}")
    a = cert.input
    e = a.ring.one - a * cert.witness
    try:
        p = Projection(e)
    except NotAProjection:
        raise InternalInconsistency(f"1 - ax = {e} is not a projection") from None
    if not (e * a).is_zero():
        raise InternalInconsistency("a^pi a != 0")
    return p


class WitnessMode(enum.Enum):
    SYMMETRIC_POWER = "SymmetricPower"
    SYMMETRIC_AX = "SymmetricAX"


def core_from_witness(a: Element, x: Element, k: int,
                      mode: WitnessMode | str) -> InverseCertificate:
    """Core inverse from a witness of the weakened systems.

    SymmetricPower checks ``xa^2 = a``, ``x^k = a x^(k+1)``,
    ``(a^k x^k)* = a^k x^k`` and returns ``a^(k-1) x^k``.
    SymmetricAX checks ``xa^2 = a``, ``x^k = a x^(k+1)``, ``(ax)* = ax`` and
    returns ``xax``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    mode = WitnessMode(mode) if isinstance(mode, str) else mode
    a.ring.check(x)
    if x * a * a != a:
        raise HypothesisNotMet("xa^2=a", "xa^2 != a")
    xk = x ** k
    if xk != a * xk * x:
        raise HypothesisNotMet("x^k=ax^(k+1)", "x^k != a x^(k+1)")
    if mode is WitnessMode.SYMMETRIC_POWER:
        akxk = a ** k * xk
        if akxk.star != akxk:
            raise HypothesisNotMet("(a^kx^k)*=a^kx^k", "a^k x^k is not symmetric")
        z = a ** (k - 1) * xk
        route = "symmetric-power-witness"
    else:
        ax = a * x
        if ax.star != ax:
            raise HypothesisNotMet("(ax)*=ax", "ax is not symmetric")
        z = x * a * x
        route = "symmetric-ax-witness"
    return certify(K.CORE, a, z, 1, route)


def ep_check(a: Element, x: Element | None = None, k: int = 1) -> InverseCertificate | None:
    """EP certificate, witness ``a# = a^dagger``.

    Without a witness, computes both inverses and compares them.  With a
    witness satisfying ``xa^2 = a``, ``(xa)* = xa`` and ``x^k = a x^(k+1)``,
    builds ``a# = x^2 a``; returns None when the hypotheses fail.
    """
    if x is None:
        return _ep(a, _Trace())
    a.ring.check(x)
    xk = x ** k
    if x * a * a != a or (x * a).star != x * a or xk != a * xk * x:
        return None
    return certify(K.EP, a, x * x * a, 1, "witness-square")


@dataclass(frozen=True)
class CoreNilpotentParts:
    a1: Element
    a2: Element
    a1_certificate: InverseCertificate


def decompose_core_nilpotent(a: Element, cert: InverseCertificate) -> CoreNilpotentParts:
    """``a = a1 + a2`` with ``a1 = a^2 x`` right core invertible and ``a2^2 = 0``."""
    if cert.kind is not K.RIGHT_CORE or cert.input != a:
        raise ValueError("need a right-core certificate for a")
    x = cert.witness
    a1 = a * a * x
    a2 = a * (a.ring.one - a * x)
    checks = {
        "a=a1+a2": a1 + a2 == a,
        "a2^2=0": (a2 * a2).is_zero(),
        "a1a2*=0": (a1 * a2.star).is_zero(),
        "a2a1=0": (a2 * a1).is_zero(),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InternalInconsistency(f"core-nilpotent decomposition fails {failed}")
    y_cert = try_certify(K.RIGHT_CORE, a1, x * a * x, 1, "xax")
    if y_cert is None:
        raise InternalInconsistency("xax is not a right core inverse of a^2x")
    return CoreNilpotentParts(a1, a2, y_cert)


def representation_blocks(a: Element,
                          cert: InverseCertificate) -> tuple[PeirceBlocks, PeirceBlocks]:
    """Peirce blocks of a and its witness relative to ``q = ax``, checked."""
    if cert.kind not in (K.RIGHT_CORE, K.RIGHT_PSEUDO_CORE):
        raise ValueError("need a right-core or right-pseudo-core certificate")
    x = cert.witness
    ring = a.ring
    q = a * x
    try:
        proj = Projection(q)
    except NotAProjection:
        raise InternalInconsistency("ax is not a projection") from None
    pa = peirce_decompose(a, proj)
    px = peirce_decompose(x, proj)
    a1, a3 = pa.a11, pa.a21
    x1, x2 = px.a11, px.a12
    nq = ring.one - q
    checks = {
        "qx=x": q * x == x,
        "a1x1=q": a1 * x1 == q,
        "a1x2=0": (a1 * x2).is_zero(),
    }
    if cert.kind is K.RIGHT_CORE:
        checks["(1-q)a=0"] = (nq * a).is_zero()
        checks["(1-q)x=0"] = (nq * x).is_zero()
    else:
        ak = a ** cert.index_k
        checks["qa^k=a^k"] = q * ak == ak
        checks["a3x1=0"] = (a3 * x1).is_zero()
        checks["a3x2=0"] = (a3 * x2).is_zero()
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InternalInconsistency(f"block identities fail: {failed}")
    return pa, px


def reverse_order_check(a: Element, b: Element, cert_a: InverseCertificate | None = None,
                        cert_b: InverseCertificate | None = None) -> InverseCertificate | None:
    """Right core certificate for ab with witness ``x_b x_a``, or None.

    Applies when ``a x_a = b x_b`` or when ``a = a b x_b`` and ``b = a x_a b``;
    unmet hypotheses give None, not an error.
    """
    cert_a = cert_a or right_core_inverse(a)
    cert_b = cert_b or right_core_inverse(b)
    if cert_a is None or cert_b is None:
        return None
    xa, xb = cert_a.witness, cert_b.witness
    same_range = a * xa == b * xb
    nested = a == a * b * xb and b == a * xa * b
    if not (same_range or nested):
        return None
    route = "equal-projections" if same_range else "nested-ranges"
    return certify(K.RIGHT_CORE, a * b, xb * xa, 1, route)


# -- one-sided unit obstruction -------------------------------------------------

def one_sided_obstruction(a: Element) -> str | None:
    """Proof that a is one-sided but not two-sided invertible, if found.

    Returns ``"right"`` when ``a r = 1`` with ``r a != 1`` (then a has no
    Drazin inverse, so none of the two-sided core-type inverses exist), or
    ``"left"`` when ``l a = 1`` with ``a l != 1`` (then in addition a is not
    right core or right pseudo core invertible).  Inverses of units are unique,
    so one such r or l is enough.
    """
    ring = a.ring
    if not ring.can_solve():
        return None
    r = ring.solve([(a, ring.one)], ring.one)
    if r is not None and r * a != ring.one:
        return "right"
    l = ring.solve([(ring.one, a)], ring.one)
    if l is not None and a * l != ring.one:
        return "left"
    return None
