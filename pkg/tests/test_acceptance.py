"""Acceptance criteria 1-9, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even when
output is captured) or directly as ``python tests/test_acceptance.py``.
"""
import itertools
import json
import random
import sys
import time
from pathlib import Path

from ginv.certificate import verify
from ginv.cli import main
from ginv.finite import oracle_search
from ginv.gen_inverse import compute, core_inverse, pseudo_core_inverse, right_core_inverse
from ginv.kinds import InverseKind as K
from ginv.matrices import ExactMatrix, drazin_inverse, group_inverse, mp_inverse, random_matrix
from ginv.specs import QI, M, Z, toeplitz
from ginv.verifier import CLAIM_IDS, Pass, get_claim, run_claim
from ginv.verifier.context import EvalContext
from ginv.verifier.report import emit_report
from ginv.verifier.schema import C, build_relation_schema

sys.path.insert(0, str(Path(__file__).parent))
from conftest import six_rings  # noqa: E402

GOLDEN = Path(__file__).parent / "golden" / "schema_standard.dot"


def report(capsys, n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def rc_ok(a, x):
    ax = a * x
    return ax * a == a and ax * x == x and ax.star == ax


# -- 1 ---------------------------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for ring in six_rings():
        ctx = EvalContext(ring)
        for cid in CLAIM_IDS:
            r = run_claim(get_claim(cid), ring, ctx=ctx)
            if not isinstance(r.verdict, Pass):
                bad.append(f"{cid}@{ring.ring_id}:{r.verdict.name}")
    dt = time.perf_counter() - t0
    n = len(CLAIM_IDS) * 6
    return not bad and dt < 60, f"{n - len(bad)}/{n} claim runs pass in {dt:.1f}s (< 60s) {bad}"


# -- 2 ---------------------------------------------------------------------------------

def _aux_pairs(ring, a):
    # full (b, c) sweep on the small rings, the pairs built from a elsewhere
    if len(list(ring.elements())) <= 8:
        return list(itertools.product(ring.elements(), repeat=2))
    return [(a, a), (a, a.star), (a.star, a), (a.star, a.star)]


def criterion_2():
    cases = bad = 0
    first = None
    for ring in six_rings():
        for a in ring.elements():
            for kind in K:
                for aux in (_aux_pairs(ring, a) if kind.needs_aux else [None]):
                    cases += 1
                    got = compute(kind, a, aux).certificate
                    ref = oracle_search(a, kind, aux)
                    diff = (got is None) != (ref is None)
                    if not diff and ref is not None and kind.unique:
                        diff = got.witness != ref.witness or got.index_k != ref.index_k
                    if not diff and got is not None:
                        diff = not verify(got)
                    if diff:
                        bad += 1
                        first = first or f"{ring.ring_id} {a} {kind.value}"
    return bad == 0, f"{cases} (element, kind) cases, {bad} disagreements {first or ''}"


# -- 3 ---------------------------------------------------------------------------------

def criterion_3():
    checked = bad = 0
    for ring in six_rings():
        ctx = EvalContext(ring)
        for a in ctx.elements:
            ws = ctx.witnesses(K.RIGHT_CORE, a)
            if not ws:
                continue
            checked += 1
            if len({(a * x).value for x in ws}) != 1:
                bad += 1
    return bad == 0 and checked > 0, f"{checked} right core invertible elements, " \
                                     f"{bad} with more than one product ax"


# -- 4 ---------------------------------------------------------------------------------

def _power_subjects():
    for ring in six_rings():
        yield from ring.elements()
    rng = random.Random(4)
    for ring in (QI(2), QI(3)):
        for _ in range(40):
            yield ring.random_element(rng)
    # cubes of S*^2 need band 6, beyond the default search bound
    tz = toeplitz(8, 8)
    yield from (tz.S_star, tz.one, tz.zero, tz.S_star * tz.S_star, tz.one - tz.E(0, 0))


def criterion_4():
    certified = bad = 0
    for a in _power_subjects():
        c = right_core_inverse(a)
        if c is None:
            continue
        certified += 1
        x = c.witness
        for n in (2, 3):
            an = a ** n
            if not rc_ok(an, x ** n):
                bad += 1
            cn = right_core_inverse(an)
            if cn is None or not rc_ok(a, a ** (n - 1) * cn.witness):
                bad += 1
    return bad == 0 and certified > 0, f"{certified} certified elements, n in (2, 3), " \
                                       f"{bad} failures"


# -- 5 ---------------------------------------------------------------------------------

def criterion_5():
    notes = []
    ok = True
    for bound in (4, 5, 6):
        tz = toeplitz(bound, bound)
        c = right_core_inverse(tz.S_star)
        good = (c is not None and c.witness == tz.S and len(c.equations_checked) == 3
                and all(eq.holds for eq in c.equations_checked))
        no_core = core_inverse(tz.S_star) is None
        no_rc = right_core_inverse(tz.S) is None
        ok &= good and no_core and no_rc
        notes.append(f"b={bound}:{'ok' if good and no_core and no_rc else 'bad'}")
    return ok, "S* right core witness S, no core inverse, S uncertified " + " ".join(notes)


# -- 6 ---------------------------------------------------------------------------------

def criterion_6():
    z8 = Z(8)
    a = z8.element(2)
    pc = pseudo_core_inverse(a)
    ok1 = (pc is not None and pc.witness.is_zero() and pc.index_k == 3
           and core_inverse(a) is None)
    q = QI(2)
    n = q.element([[0, 1], [0, 0]])
    pc2 = pseudo_core_inverse(n)
    ok2 = (pc2 is not None and pc2.witness.is_zero() and pc2.index_k == 2
           and core_inverse(n) is None)
    return ok1 and ok2, f"Z8 2: k={pc and pc.index_k}; [[0,1],[0,0]]: k={pc2 and pc2.index_k}"


# -- 7 ---------------------------------------------------------------------------------

def _matrix_cases(count=500, seed=7):
    rng = random.Random(seed)
    for i in range(count):
        size = rng.randint(1, 5)
        cx = rng.random() < 0.5
        shape = i % 3
        if shape == 0:
            yield random_matrix(rng, size, complex_entries=cx)
        elif shape == 1:
            yield random_matrix(rng, size, complex_entries=cx, rank=rng.randint(0, size - 1))
        else:
            # upper triangular with some zero diagonal entries: nontrivial index
            m = random_matrix(rng, size, complex_entries=cx)
            zero_diag = {j for j in range(size) if rng.random() < 0.6}
            yield ExactMatrix.of([[m[r, c] if c > r or (c == r and r not in zero_diag)
                                   else 0 for c in range(size)] for r in range(size)])


def criterion_7():
    t0 = time.perf_counter()
    fails = 0
    high_index = rank_def = 0
    for a in _matrix_cases():
        x = mp_inverse(a)
        if not (a @ x @ a == a and x @ a @ x == x and (a @ x).H == a @ x
                and (x @ a).H == x @ a):
            fails += 1
        d = drazin_inverse(a)
        k = d.index
        y = d.inverse
        if not (y @ a @ y == y and a @ y == y @ a and a ** k @ a @ y == a ** k):
            fails += 1
        g = group_inverse(a)
        if (g is None) != (k > 1):
            fails += 1
        elif g is not None and not (a @ g @ a == a and g @ a @ g == g and a @ g == g @ a):
            fails += 1
        high_index += k > 1
        rank_def += a.rank() < a.rows
    dt = time.perf_counter() - t0
    return fails == 0 and dt < 120, (f"500 matrices ({rank_def} rank-deficient, {high_index} "
                                     f"of index > 1), {fails} failures in {dt:.1f}s (< 120s)")


# -- 8 ---------------------------------------------------------------------------------

def criterion_8():
    rings = [Z(6), Z(8), M(2), QI(2), toeplitz()]
    s = build_relation_schema(rings)
    need = [(C.RIGHT_CORE, C.RIGHT_PSEUDO_CORE), (C.CORE, C.RIGHT_CORE), (C.CORE, C.PSEUDO_CORE),
            (C.PSEUDO_CORE, C.DRAZIN), (C.EP, C.CORE)]
    missing = [f"{a.value}->{b.value}" for a, b in need if not s.has_edge(a, b)]
    rc = s.separation(C.RIGHT_CORE, C.CORE)
    pc = s.separation(C.PSEUDO_CORE, C.CORE)
    seps = (rc is not None and ("Toeplitz(Q)", "S*") in rc.examples
            and pc is not None and ("Z8", "2") in pc.examples)
    dot1 = emit_report([], s, "dot")
    dot2 = emit_report([], build_relation_schema(rings), "dot")
    stable = dot1 == dot2 == GOLDEN.read_text()
    ok = not missing and seps and stable
    return ok, (f"{len(s.edges)} edges, missing {missing or 'none'}; separations "
                f"{'present' if seps else 'absent'}; DOT {'matches' if stable else 'differs from'}"
                f" golden")


# -- 9 ---------------------------------------------------------------------------------

def _cli_cases():
    kinds = ["right-core", "core", "dual-core", "pseudo-core", "right-pseudo-core", "mp",
             "group", "drazin", "ep", "one-three"]
    rng = random.Random(9)
    cases = [("Toeplitz", "S", "right-core"), ("Toeplitz", "S*", "right-core"),
             ("Toeplitz", "S*", "core"), ("Toeplitz", "S*", "right-pseudo-core"),
             ("Toeplitz", "1", "mp"), ("M2(Q(i))", "[[0,1],[0,0]]", "core"),
             ("M2(Q(i))", "[[0,1],[0,0]]", "pseudo-core"), ("M2(Q(i))", "[[1,1],[0,0]]", "ep")]
    while len(cases) < 50:
        ring = rng.choice(["Z6", "Z8", "Z12", "M2(Z2)", "M2(Z3)", "M2(Q(i))"])
        if ring.startswith("Z"):
            el = str(rng.randrange(int(ring[1:])))
        elif ring == "M2(Q(i))":
            el = json.dumps([[rng.choice([0, 1, 2, "1/2", "i"]) for _ in range(2)]
                             for _ in range(2)])
        else:
            p = int(ring[4])
            el = json.dumps([[rng.randrange(p) for _ in range(2)] for _ in range(2)])
        cases.append((ring, el, rng.choice(kinds)))
    return cases


def criterion_9(tmp):
    expected = {"found": 0, "not-found": 3, "unknown-at-bound": 4}
    bad = []
    codes = {}
    for i, (ring, el, kind) in enumerate(_cli_cases()):
        out = Path(tmp) / f"c{i}.json"
        code = main(["compute", "--ring", ring, "--element", el, "--kind", kind,
                     "--out", str(out)])
        doc = json.loads(out.read_text())
        rep = Path(tmp) / f"v{i}.json"
        code2 = main(["compute", "--verify-only", str(out), "--out", str(rep)])
        verdict = json.loads(rep.read_text())
        codes[code] = codes.get(code, 0) + 1
        if code != expected[doc["status"]] or code2 != code or verdict["verified"] is not True:
            bad.append((ring, el, kind, code, code2))
    spread = ", ".join(f"exit {c}: {n}" for c, n in sorted(codes.items()))
    return not bad, f"50 round trips ({spread}), {len(bad)} mismatches {bad[:3] or ''}"


# -- pytest entry points ------------------------------------------------------------------

def test_criterion_1_exhaustive_claims(capsys):
    assert report(capsys, 1, *criterion_1())


def test_criterion_2_oracle_agreement(capsys):
    assert report(capsys, 2, *criterion_2())


def test_criterion_3_right_core_invariance(capsys):
    assert report(capsys, 3, *criterion_3())


def test_criterion_4_power_laws(capsys):
    assert report(capsys, 4, *criterion_4())


def test_criterion_5_one_sided_separation(capsys):
    assert report(capsys, 5, *criterion_5())


def test_criterion_6_pseudo_core_separations(capsys):
    assert report(capsys, 6, *criterion_6())


def test_criterion_7_matrix_kernels(capsys):
    assert report(capsys, 7, *criterion_7())


def test_criterion_8_relation_schema(capsys):
    assert report(capsys, 8, *criterion_8())


def test_criterion_9_cli_round_trip(capsys, tmp_path):
    assert report(capsys, 9, *criterion_9(tmp_path))


if __name__ == "__main__":
    import tempfile
    results = []
    for n, fn in enumerate([criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                            criterion_6, criterion_7, criterion_8], start=1):
        results.append(report(None, n, *fn()))
    with tempfile.TemporaryDirectory() as d:
        results.append(report(None, 9, *criterion_9(d)))
    sys.exit(0 if all(results) else 1)
