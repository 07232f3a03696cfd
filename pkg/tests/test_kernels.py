import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from ginv import _kernels
from ginv.specs import M, Z

from conftest import six_rings

pytestmark = pytest.mark.skipif(_kernels.COMPILED is None, reason="compiled kernels not built")

CODES = sorted(_kernels.KIND_CODES.items())


@pytest.mark.parametrize("ring", six_rings(), ids=lambda r: r.ring_id)
def test_search_compiled_matches_python(ring):
    t = ring.tables
    n = t.size
    aux_pairs = [(0, 0), (1 % n, 1 % n), (n - 1, 1 % n)]
    for name, code in CODES:
        for a in range(n):
            for k in (1, 2, 3):
                for b, c in aux_pairs:
                    py = _kernels.PYTHON.search(code, a, k, b, c, t)
                    cy = _kernels.COMPILED.search(code, a, k, b, c, t)
                    assert py == cy, (name, a, k, b, c)
                    first = _kernels.COMPILED.search(code, a, k, b, c, t, first=True)
                    assert first == py[:1]
                if name not in ("bc", "left-bc", "right-bc"):
                    break


@pytest.mark.parametrize("ring", [Z(12), M(2), M(3)], ids=lambda r: r.ring_id)
def test_solve_and_inverse_tables_match(ring):
    t = ring.tables
    n = t.size
    for right in (True, False):
        assert (_kernels.PYTHON.one_sided_inverses(t, right)
                == _kernels.COMPILED.one_sided_inverses(t, right))
    for a in range(0, n, 5):
        for rhs in range(0, n, 7):
            lefts, rights = [a, 1 % n], [1 % n, a]
            for first in (True, False):
                assert (_kernels.PYTHON.solve_terms(lefts, rights, rhs, t, first)
                        == _kernels.COMPILED.solve_terms(lefts, rights, rhs, t, first))


def test_pure_python_switch():
    env = {**os.environ, "GINV_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c",
                          "from ginv import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert _kernels.BACKEND == "cython"


def test_benchmark_runs(tmp_path):
    if _kernels.COMPILED is None:
        pytest.skip("compiled kernels not built")
    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    out = tmp_path / "rows.json"
    p = subprocess.run([sys.executable, str(script), "--repeat", "1", "--json", str(out)],
                       capture_output=True, text=True)
    assert p.returncode == 0, p.stderr
    rows = json.loads(out.read_text())
    assert rows and all(r["cython_s"] > 0 for r in rows)
