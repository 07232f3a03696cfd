"""Claims, conditions and the claim runner."""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence, Union

from ginv.ring import Element, StarRing
from ginv.verifier.context import EvalContext

Subject = Union[Element, tuple[Element, Element]]


class SubjectKind(enum.Enum):
    ELEMENT = "element"
    PAIR = "pair"


@dataclass(frozen=True)
class Condition:
    """One predicate, keyed by its quoted condition text."""

    text: str
    evaluate: Callable[[Any, EvalContext], bool]
    requires: frozenset[str]


@dataclass(frozen=True)
class AllEquivalent:
    pass


@dataclass(frozen=True)
class Implications:
    pairs: tuple[tuple[str, str], ...]


Relation = Union[AllEquivalent, Implications]


@dataclass(frozen=True)
class Claim:
    claim_id: str
    summary: str
    subject: SubjectKind
    conditions: tuple[Condition, ...]
    relation: Relation
    domain: Condition | None = None

    @property
    def requires(self) -> frozenset[str]:
        req = set()
        for c in self.conditions:
            req |= c.requires
        if self.domain is not None:
            req |= self.domain.requires
        return frozenset(req)

    @property
    def texts(self) -> tuple[str, ...]:
        return tuple(c.text for c in self.conditions)

    def violated(self, vector: Sequence[bool]) -> bool:
        if isinstance(self.relation, AllEquivalent):
            return len(set(vector)) > 1
        index = {t: i for i, t in enumerate(self.texts)}
        return any(vector[index[p]] and not vector[index[q]] for p, q in self.relation.pairs)


def equivalences(*texts: str) -> tuple[tuple[str, str], ...]:
    """Implication pairs making the given conditions pairwise equivalent."""
    out = []
    for i in range(len(texts)):
        out.append((texts[i], texts[(i + 1) % len(texts)]))
    return tuple(out)


# -- scopes and results --------------------------------------------------------

@dataclass(frozen=True)
class AllElements:
    def describe(self) -> str:
        return "all"


@dataclass(frozen=True)
class Sample:
    n: int
    seed: int

    def describe(self) -> str:
        return f"sample(n={self.n}, seed={self.seed})"


Scope = Union[AllElements, Sample]


@dataclass(frozen=True)
class Pass:
    name: str = field(default="Pass", init=False)


@dataclass(frozen=True)
class Counterexample:
    subject: Any
    truth: tuple[tuple[str, bool], ...]
    name: str = field(default="Counterexample", init=False)


@dataclass(frozen=True)
class Skipped:
    reason: str
    name: str = field(default="Skipped", init=False)


Verdict = Union[Pass, Counterexample, Skipped]


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    ring_id: str
    scope: str
    elements_checked: int
    verdict: Verdict
    #: number of checked subjects on which each condition held
    true_counts: tuple[tuple[str, int], ...] = ()

    @property
    def passed(self) -> bool:
        return isinstance(self.verdict, Pass)

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "claim_id": self.claim_id,
            "ring_id": self.ring_id,
            "scope": self.scope,
            "elements_checked": self.elements_checked,
            "verdict": self.verdict.name,
            "true_counts": {t: n for t, n in self.true_counts},
        }
        v = self.verdict
        if isinstance(v, Counterexample):
            doc["counterexample"] = {"subject": encode_subject(v.subject),
                                     "truth": {t: b for t, b in v.truth}}
        elif isinstance(v, Skipped):
            doc["reason"] = v.reason
        return doc


def encode_subject(s: Subject) -> Any:
    if isinstance(s, tuple):
        return [e.encode() for e in s]
    return s.encode()


def _subjects(claim: Claim, ctx: EvalContext, scope: Scope):
    ring = ctx.ring
    if isinstance(scope, Sample):
        rng = random.Random(scope.seed)
        for _ in range(scope.n):
            if claim.subject is SubjectKind.ELEMENT:
                yield ring.random_element(rng)
            else:
                yield ring.random_element(rng), ring.random_element(rng)
        return
    elems = ctx.elements
    if claim.subject is SubjectKind.ELEMENT:
        yield from elems
    else:
        yield from itertools.product(elems, repeat=2)


def run_claim(claim: Claim, ring: StarRing, scope: Scope | None = None,
              ctx: EvalContext | None = None) -> ClaimResult:
    """Evaluate every condition on every subject in scope.

    The first subject violating the expected relation is reported with its
    full truth vector.  Capability gaps give Skipped.
    """
    scope = scope or AllElements()
    ctx = ctx or EvalContext(ring)
    missing = claim.requires - ctx.features
    if isinstance(scope, AllElements) and "enumerable" not in ctx.features:
        missing = missing | {"enumerable"}
    if missing:
        return ClaimResult(claim.claim_id, ring.ring_id, scope.describe(), 0,
                           Skipped(f"{ring.ring_id} lacks {', '.join(sorted(missing))}"))
    counts = [0] * len(claim.conditions)
    checked = 0
    for s in _subjects(claim, ctx, scope):
        if claim.domain is not None and not claim.domain.evaluate(s, ctx):
            continue
        vector = [bool(c.evaluate(s, ctx)) for c in claim.conditions]
        checked += 1
        for i, v in enumerate(vector):
            counts[i] += v
        if claim.violated(vector):
            truth = tuple(zip(claim.texts, vector))
            return ClaimResult(claim.claim_id, ring.ring_id, scope.describe(), checked,
                               Counterexample(s, truth), tuple(zip(claim.texts, counts)))
    return ClaimResult(claim.claim_id, ring.ring_id, scope.describe(), checked, Pass(),
                       tuple(zip(claim.texts, counts)))
