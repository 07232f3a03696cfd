import dataclasses
import json
from pathlib import Path

import pytest

from ginv.errors import InvalidFormat
from ginv.specs import QI, M, Z, toeplitz
from ginv.verifier import (CLAIM_IDS, AllElements, Counterexample, Pass, Sample, Skipped,
                           get_claim, registry, run_claim)
from ginv.verifier.claims import AllEquivalent, Condition, Implications
from ginv.verifier.report import emit_report, hasse_graph
from ginv.verifier.schema import C, audit, build_relation_schema
from ginv.verifier.suite import parse_suite, run_suite, suite_schema

GOLDEN = Path(__file__).parent / "golden"

EXPECTED_IDS = [
    "Lemma2.1", "Remark2.2", "Cor2.3", "Cor2.4", "Thm2.5", "Lemma2.6", "Thm2.7", "Prop2.8",
    "Prop2.9", "Thm2.10", "Thm2.11", "Thm3.1", "Remark3.2", "Cor3.3", "Cor3.4", "Remark3.5",
    "Thm4.1", "Prop4.2", "Thm4.3", "Lemma4.6", "Thm4.7", "Thm4.8", "Thm4.9", "Thm4.10",
    "Thm4.11",
]


def test_registry_complete():
    assert sorted(CLAIM_IDS) == sorted(EXPECTED_IDS)
    assert set(registry()) == set(EXPECTED_IDS)


def test_unknown_claim_lists_known():
    with pytest.raises(KeyError) as exc:
        get_claim("Thm9.9")
    assert "Thm2.5" in str(exc.value)


@pytest.mark.parametrize("cid", EXPECTED_IDS)
def test_condition_texts_unique(cid):
    texts = get_claim(cid).texts
    assert len(texts) == len(set(texts)) >= 2


# -- run_claim examples ---------------------------------------------------------------

@pytest.mark.parametrize("cid,ring,count", [
    ("Thm2.5", Z(6), 6),
    ("Thm3.1", M(2), 16),
    ("Lemma2.6", Z(8), 64),
])
def test_run_claim_examples(cid, ring, count):
    r = run_claim(get_claim(cid), ring, AllElements())
    assert isinstance(r.verdict, Pass)
    assert r.elements_checked == count


def test_toeplitz_all_elements_skipped():
    r = run_claim(get_claim("Thm2.5"), toeplitz(), AllElements())
    assert isinstance(r.verdict, Skipped)
    assert "enumerable" in r.verdict.reason


def test_sample_scope_on_matrices():
    r = run_claim(get_claim("Cor2.4"), QI(2), Sample(10, 3))
    assert not isinstance(r.verdict, Counterexample)


def _mutate(claim, index):
    conds = list(claim.conditions)
    c = conds[index]
    conds[index] = Condition(c.text, lambda s, ctx, f=c.evaluate: not f(s, ctx), c.requires)
    return dataclasses.replace(claim, conditions=tuple(conds))


def test_mutated_condition_gives_counterexample():
    claim = _mutate(get_claim("Thm2.5"), 0)
    r = run_claim(claim, Z(6))
    assert isinstance(r.verdict, Counterexample)
    truth = dict(r.verdict.truth)
    assert set(truth) == set(claim.texts)
    assert len(set(truth.values())) > 1


def test_dropping_a_condition_leaves_other_columns():
    claim = get_claim("Thm3.1")
    full = dict(run_claim(claim, M(2)).true_counts)
    dropped = claim.texts[-1]
    rest = tuple(c for c in claim.conditions if c.text != dropped)
    if isinstance(claim.relation, AllEquivalent):
        rel = claim.relation
    else:
        rel = Implications(tuple(p for p in claim.relation.pairs if dropped not in p))
    smaller = dataclasses.replace(claim, conditions=rest, relation=rel)
    part = dict(run_claim(smaller, M(2)).true_counts)
    assert part == {t: n for t, n in full.items() if t != dropped}


def test_run_claim_deterministic():
    a = run_claim(get_claim("Thm4.7"), Z(12))
    b = run_claim(get_claim("Thm4.7"), Z(12))
    assert a == b
    s1 = run_claim(get_claim("Cor2.4"), QI(2), Sample(5, 11))
    s2 = run_claim(get_claim("Cor2.4"), QI(2), Sample(5, 11))
    assert s1.to_json() == s2.to_json()


# -- relation schema --------------------------------------------------------------------

def test_schema_z6_units_and_ep():
    s = build_relation_schema([Z(6)])
    rows = audit(Z(6))
    for row in rows:
        if row.get(C.INVERTIBLE):
            assert all(v for _, v in row.member)
        # every element of Z6 is regular, hence EP under the identity involution
        assert row.get(C.EP)
    assert s.has_edge(C.INVERTIBLE, C.EP)


def test_schema_z8_pseudo_core_separation():
    s = build_relation_schema([Z(8)])
    sep = s.separation(C.PSEUDO_CORE, C.CORE)
    assert sep is not None and sep.examples[0] == ("Z8", "2")


def test_schema_toeplitz_right_core_separation():
    s = build_relation_schema([toeplitz()])
    sep = s.separation(C.RIGHT_CORE, C.CORE)
    assert sep is not None and ("Toeplitz(Q)", "S*") in sep.examples
    assert all(e.unresolved == 0 for e in s.edges)


def test_schema_needs_rings():
    with pytest.raises(ValueError):
        build_relation_schema([])


@pytest.fixture(scope="module")
def standard_schema():
    return build_relation_schema([Z(6), Z(8), M(2), QI(2), toeplitz()])


@pytest.mark.parametrize("src,dst", [
    (C.RIGHT_CORE, C.RIGHT_PSEUDO_CORE), (C.CORE, C.RIGHT_CORE), (C.CORE, C.PSEUDO_CORE),
    (C.PSEUDO_CORE, C.DRAZIN), (C.EP, C.CORE)])
def test_required_edges(standard_schema, src, dst):
    assert standard_schema.has_edge(src, dst)


def test_edges_have_no_counterexamples(standard_schema):
    seps = {(s.source, s.target) for s in standard_schema.separations}
    for e in standard_schema.edges:
        assert (e.source, e.target) not in seps
        assert e.witnesses > 0
    for s in standard_schema.separations:
        assert s.examples and s.count >= len(s.examples)


def test_hasse_graph_acyclic(standard_schema):
    import networkx as nx
    g, members = hasse_graph(standard_schema)
    assert nx.is_directed_acyclic_graph(g)
    flat = [c for ms in members.values() for c in ms]
    assert len(flat) == len(set(flat)) == len(C)


# -- reports -------------------------------------------------------------------------------

def test_json_empty_results():
    s = build_relation_schema([Z(6)])
    doc = json.loads(emit_report([], s, "json"))
    assert doc["claims"] == [] and doc["schema"]["rings"] == ["Z6"]
    assert json.loads(emit_report([], None, "json")) == {"claims": [], "schema": None}


def test_markdown_single_row():
    r = run_claim(get_claim("Thm2.5"), Z(6))
    md = emit_report([r], None, "markdown")
    rows = [ln for ln in md.splitlines() if ln.startswith("| Thm2.5")]
    assert rows == ["| Thm2.5 | Z6 | all | 6 | Pass |"]
    assert emit_report([r], None, "md") == md


def test_markdown_counterexample_section():
    r = run_claim(_mutate(get_claim("Thm2.5"), 0), Z(6))
    md = emit_report([r], None, "markdown")
    assert "## Counterexample to Thm2.5 in Z6" in md


def test_unknown_format():
    with pytest.raises(InvalidFormat):
        emit_report([], None, "svg")


def test_dot_golden_small():
    s = build_relation_schema([Z(6), Z(8), M(2)])
    dot = emit_report([], s, "dot")
    assert dot == (GOLDEN / "schema_z6_z8_m2z2.dot").read_text()


def test_dot_golden_standard(standard_schema):
    dot = emit_report([], standard_schema, "dot")
    assert dot == (GOLDEN / "schema_standard.dot").read_text()
    assert emit_report([], standard_schema, "dot") == dot


# -- suites ---------------------------------------------------------------------------------

SUITE = """
[[run]]
claims = ["Thm2.5", "Lemma2.1"]
ring = {kind = "Zn", n = 6, involution = "identity"}

[[run]]
claim_id = "Cor2.4"
ring = {kind = "MatQ(i)", size = 2, involution = "conjugate-transpose"}
scope = {sample = 4}

[schema]
rings = [{kind = "Zn", n = 8, involution = "identity"}]
"""


def test_suite_needs_seed():
    s = parse_suite(SUITE)
    assert s.needs_seed
    with pytest.raises(InvalidFormat):
        run_suite(s)


def test_suite_runs_in_order():
    s = parse_suite(SUITE, seed=5)
    results = run_suite(s)
    assert [(r.claim_id, r.ring_id) for r in results] == [
        ("Thm2.5", "Z6"), ("Lemma2.1", "Z6"), ("Cor2.4", "M2(Q(i))")]
    assert results[2].scope == "sample(n=4, seed=5)"
    assert suite_schema(s).rings == ("Z8",)


def test_suite_parallel_identical():
    s = parse_suite(SUITE, seed=5)
    a = emit_report(run_suite(s), None, "json")
    b = emit_report(run_suite(s, workers=2), None, "json")
    assert a == b


@pytest.mark.parametrize("bad", [
    "[[run]]\nclaims = 'all'\n",
    "[[run]]\nclaims = ['Nope']\nring = {kind = 'Zn', n = 6}\n",
    "[[run]]\nring = {kind = 'Zn', n = 6}\nscope = 'most'\n",
    "not toml [",
])
def test_suite_rejects_bad_input(bad):
    with pytest.raises(InvalidFormat):
        parse_suite(bad, seed=1)
