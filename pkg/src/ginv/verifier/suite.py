"""TOML suite files and the suite runner.

A suite lists runs and optionally asks for a relation schema::

    [[run]]
    claims = "all"                      # or ["Thm2.5", "Lemma2.6"], or claim_id = "..."
    ring = {kind = "Zn", n = 6, involution = "identity"}
    scope = "all"                       # or {sample = 50, seed = 1}

    [schema]
    rings = [{kind = "Zn", n = 8}, {kind = "Toeplitz"}]
    format = "dot"                      # only used when no --format is given
"""
from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ginv.errors import InvalidFormat
from ginv.specs import ring_from_spec
from ginv.verifier.claims import AllElements, ClaimResult, Sample, Scope, run_claim
from ginv.verifier.context import EvalContext
from ginv.verifier.registry import CLAIM_IDS, get_claim
from ginv.verifier.schema import RelationSchema, build_relation_schema


@dataclass(frozen=True)
class Run:
    ring_spec: str          # canonical JSON, so runs pickle cleanly into workers
    claim_ids: tuple[str, ...]
    scope: Scope


@dataclass(frozen=True)
class Suite:
    runs: tuple[Run, ...]
    schema_rings: tuple[str, ...] | None = None
    schema_format: str | None = None

    @property
    def needs_seed(self) -> bool:
        return any(isinstance(r.scope, Sample) and r.scope.seed is None for r in self.runs)


def _scope(doc: Any, seed: int | None) -> Scope:
    if doc in (None, "all"):
        return AllElements()
    if isinstance(doc, dict) and "sample" in doc:
        s = doc.get("seed", seed)
        return Sample(int(doc["sample"]), None if s is None else int(s))
    raise InvalidFormat(f"bad scope {doc!r}; use \"all\" or {{sample = n, seed = s}}")


def _claims(doc: dict) -> tuple[str, ...]:
    raw = doc.get("claims", doc.get("claim_id", "all"))
    if raw == "all":
        return CLAIM_IDS
    if isinstance(raw, str):
        raw = [raw]
    unknown = [c for c in raw if c not in CLAIM_IDS]
    if unknown:
        raise InvalidFormat(f"unknown claims {unknown}; known: {', '.join(CLAIM_IDS)}")
    return tuple(raw)


def _canonical(spec: Any) -> str:
    if not isinstance(spec, dict):
        raise InvalidFormat(f"ring spec must be a table, got {spec!r}")
    ring_from_spec(spec)  # validate early
    return json.dumps(spec, sort_keys=True)


def parse_suite(text: str, seed: int | None = None) -> Suite:
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InvalidFormat(f"bad suite file: {exc}") from None
    runs = []
    for entry in doc.get("run", []):
        if "ring" not in entry:
            raise InvalidFormat("every [[run]] needs a ring")
        runs.append(Run(_canonical(entry["ring"]), _claims(entry), _scope(entry.get("scope"), seed)))
    schema = doc.get("schema")
    rings = fmt = None
    if schema is not None:
        rings = tuple(_canonical(r) for r in schema.get("rings", []))
        if not rings:
            raise InvalidFormat("[schema] needs at least one ring")
        fmt = schema.get("format")
    return Suite(tuple(runs), rings, fmt)


def load_suite(path: str, seed: int | None = None) -> Suite:
    with open(path, encoding="utf-8") as fh:
        return parse_suite(fh.read(), seed)


def _execute(run: Run) -> list[ClaimResult]:
    ring = ring_from_spec(json.loads(run.ring_spec))
    ctx = EvalContext(ring)
    return [run_claim(get_claim(cid), ring, run.scope, ctx) for cid in run.claim_ids]


def run_suite(suite: Suite, workers: int = 1) -> list[ClaimResult]:
    """Results in suite order; runs are farmed out when ``workers > 1``."""
    if suite.needs_seed:
        raise InvalidFormat("sampled scopes need an explicit seed")
    if workers > 1 and len(suite.runs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_execute, suite.runs))
    else:
        batches = [_execute(r) for r in suite.runs]
    return [r for batch in batches for r in batch]


def suite_schema(suite: Suite) -> RelationSchema | None:
    if suite.schema_rings is None:
        return None
    return build_relation_schema([ring_from_spec(json.loads(s)) for s in suite.schema_rings])
