"""Inverse certificates: a witness plus the replayed defining equations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ginv.errors import InternalInconsistency, InvalidElement
from ginv.kinds import Equation, InverseKind, defining_equations
from ginv.ring import Element, StarRing


@dataclass(frozen=True)
class InverseCertificate:
    kind: InverseKind
    input: Element
    witness: Element
    index_k: int
    equations_checked: tuple[Equation, ...]
    construction_route: str
    aux: tuple[Element, Element] | None = field(default=None)

    @property
    def ring_id(self) -> str:
        return self.input.ring.ring_id

    @property
    def holds(self) -> bool:
        return all(eq.holds for eq in self.equations_checked)

    def to_json(self) -> dict[str, Any]:
        doc = {
            "kind": self.kind.value,
            "ring_id": self.ring_id,
            "a": self.input.encode(),
            "witness": self.witness.encode(),
            "k": self.index_k,
            "index_k": self.index_k,
            "construction_route": self.construction_route,
            "equations": [eq.to_json() for eq in self.equations_checked],
        }
        if self.aux is not None:
            doc["aux"] = {"b": self.aux[0].encode(), "c": self.aux[1].encode()}
        return doc

    @classmethod
    def from_json(cls, doc: dict[str, Any], ring: StarRing) -> "InverseCertificate":
        """Rebuild a certificate, re-deriving its equations from scratch.

        The stored ``equations`` list is ignored; use :func:`verify` to compare
        the stored verdict with a fresh replay.
        """
        if doc.get("ring_id") != ring.ring_id:
            raise InvalidElement(
                f"certificate is for ring {doc.get('ring_id')!r}, not {ring.ring_id!r}")
        kind = InverseKind.parse(doc["kind"])
        a = ring.element(doc["a"])
        x = ring.element(doc["witness"])
        aux = None
        if "aux" in doc and doc["aux"] is not None:
            aux = (ring.element(doc["aux"]["b"]), ring.element(doc["aux"]["c"]))
        k = int(doc.get("index_k", doc.get("k", 1)))
        eqs = tuple(defining_equations(kind, a, x, k, aux))
        return cls(kind, a, x, k, eqs, doc.get("construction_route", "unknown"), aux)


def certify(kind: InverseKind, a: Element, x: Element, k: int = 1, route: str = "",
            aux: tuple[Element, Element] | None = None) -> InverseCertificate:
    """Replay the defining equations and wrap them in a certificate.

    Raises InternalInconsistency if any equation fails, so a certificate with
    a failed equation is never handed out.
    """
    eqs = tuple(defining_equations(kind, a, x, k, aux))
    cert = InverseCertificate(kind, a, x, k, eqs, route, aux)
    if not cert.holds:
        failed = [eq.eq_id for eq in eqs if not eq.holds]
        raise InternalInconsistency(
            f"{route or 'construction'} produced {x} for {kind.value} of {a}, "
            f"but {failed} fail")
    return cert


def try_certify(kind: InverseKind, a: Element, x: Element, k: int = 1, route: str = "",
                aux: tuple[Element, Element] | None = None) -> InverseCertificate | None:
    eqs = tuple(defining_equations(kind, a, x, k, aux))
    cert = InverseCertificate(kind, a, x, k, eqs, route, aux)
    return cert if cert.holds else None


def verify(cert: InverseCertificate) -> bool:
    """Independent replay of a certificate's equations."""
    eqs = defining_equations(cert.kind, cert.input, cert.witness, cert.index_k, cert.aux)
    return all(eq.holds for eq in eqs)
