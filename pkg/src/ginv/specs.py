"""Ring spec documents and the ring registry.

A ring spec is a JSON object such as::

    {"kind": "Zn", "n": 6, "involution": "identity"}
    {"kind": "MatZp", "p": 2, "size": 2, "involution": "transpose"}
    {"kind": "MatQ(i)", "size": 2, "involution": "conjugate-transpose"}
    {"kind": "Toeplitz", "band_bound": 4, "corr_bound": 4, "involution": "transpose"}
    {"kind": "Product", "factors": [{...}, {...}]}

Identical specs resolve to the same ring object, so rings are shared and
read-only after construction.
"""
from __future__ import annotations

import json
import threading
from typing import Any

from ginv.errors import InvalidElement, InvalidFormat
from ginv.finite import FiniteRing, MatZpRing, ProductRing, ZnRing
from ginv.matrices import MatrixRing
from ginv.ring import Element, StarRing
from ginv.toeplitz import ToeplitzRing

_REGISTRY: dict[str, StarRing] = {}
_BY_ID: dict[str, StarRing] = {}
_LOCK = threading.Lock()


def _expect_involution(spec: dict, allowed: tuple[str, ...]) -> str:
    inv = spec.get("involution", allowed[0])
    if inv not in allowed:
        raise InvalidFormat(f"{spec.get('kind')} supports involutions {allowed}, got {inv!r}")
    return inv


def _build(spec: dict) -> StarRing:
    kind = spec.get("kind")
    if kind == "Zn":
        _expect_involution(spec, ("identity",))
        return ZnRing(int(spec["n"]))
    if kind == "MatZp":
        _expect_involution(spec, ("transpose",))
        return MatZpRing(int(spec["p"]), int(spec.get("size", 2)))
    if kind == "MatQ(i)":
        inv = _expect_involution(spec, ("conjugate-transpose", "transpose"))
        return MatrixRing(int(spec.get("size", 2)), inv)
    if kind == "Toeplitz":
        _expect_involution(spec, ("transpose",))
        return ToeplitzRing(int(spec.get("band_bound", 4)), int(spec.get("corr_bound", 4)))
    if kind == "Product":
        _expect_involution(spec, ("componentwise",))
        factors = [ring_from_spec(f) for f in spec.get("factors", [])]
        if not factors or not all(isinstance(f, FiniteRing) for f in factors):
            raise InvalidFormat("Product needs one or more finite factors")
        return ProductRing(factors)
    raise InvalidFormat(f"unknown ring kind {kind!r}")


def ring_from_spec(spec: dict | str) -> StarRing:
    if isinstance(spec, str):
        spec = json.loads(spec)
    if not isinstance(spec, dict):
        raise InvalidFormat("ring spec must be a JSON object")
    key = json.dumps(spec, sort_keys=True)
    with _LOCK:
        ring = _REGISTRY.get(key)
    if ring is not None:
        return ring
    try:
        ring = _build(spec)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidFormat(f"bad ring spec {spec!r}: {exc}") from None
    with _LOCK:
        # same ring_id with other search bounds (Toeplitz) stays a separate instance
        known = _BY_ID.setdefault(ring.ring_id, ring)
        if known.spec() == ring.spec():
            ring = known
        _REGISTRY[key] = ring
    return ring


def ring_by_id(ring_id: str) -> StarRing:
    try:
        return _BY_ID[ring_id]
    except KeyError:
        raise InvalidElement(f"no registered ring {ring_id!r}") from None


def element_from_doc(doc: Any, ring: StarRing) -> Element:
    """Decode an element document ``{"ring_id": ..., "value": ...}``.

    A bare value (no ``ring_id``) is accepted as shorthand.
    """
    if isinstance(doc, dict) and "value" in doc:
        rid = doc.get("ring_id")
        if rid is not None and rid != ring.ring_id:
            raise InvalidElement(f"element belongs to {rid!r}, not {ring.ring_id!r}")
        return ring.element(doc["value"])
    return ring.element(doc)


def element_doc(e: Element) -> dict:
    return {"ring_id": e.ring.ring_id, "value": e.encode()}


# standard rings used by tests, the schema builder and the CLI defaults
def Z(n: int) -> ZnRing:
    return ring_from_spec({"kind": "Zn", "n": n, "involution": "identity"})  # type: ignore[return-value]


def M(p: int, size: int = 2) -> MatZpRing:
    return ring_from_spec({"kind": "MatZp", "p": p, "size": size,  # type: ignore[return-value]
                           "involution": "transpose"})


def QI(size: int = 2, involution: str = "conjugate-transpose") -> MatrixRing:
    return ring_from_spec({"kind": "MatQ(i)", "size": size,  # type: ignore[return-value]
                           "involution": involution})


def toeplitz(band_bound: int = 4, corr_bound: int = 4) -> ToeplitzRing:
    return ring_from_spec({"kind": "Toeplitz", "band_bound": band_bound,  # type: ignore[return-value]
                           "corr_bound": corr_bound, "involution": "transpose"})


def product(*factors: dict) -> ProductRing:
    return ring_from_spec({"kind": "Product", "factors": list(factors),  # type: ignore[return-value]
                           "involution": "componentwise"})
