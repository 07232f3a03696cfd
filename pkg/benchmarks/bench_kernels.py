"""Compare the Cython and pure-Python finite-ring kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]

Each workload runs the same kernel call over every element of a ring with
both backends, checks that the results agree, and reports the best of
``--repeat`` wall-clock timings.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from ginv import _kernels
from ginv.specs import M, Z

KINDS = ("right-core", "core", "mp", "pseudo-core", "drazin")


def workloads():
    for ring in (Z(12), M(2), M(3), M(2, 3)):
        t = ring.tables
        n = t.size
        for kind in KINDS:
            code = _kernels.KIND_CODES[kind]
            k = 4 if kind in ("pseudo-core", "drazin") else 1

            def run(kern, t=t, n=n, code=code, k=k):
                return [kern.search(code, a, k, 0, 0, t) for a in range(n)]
            yield f"{ring.ring_id} search {kind}", run

        def solve(kern, t=t, n=n):
            # a = a^2 t for every a: the ideal-membership step of the right core route
            mul = t.mul_l
            return [kern.solve_terms([mul[a][a]], [t.one], a, t) for a in range(n)]
        yield f"{ring.ring_id} solve a=a^2t", solve

        def units(kern, t=t):
            return [kern.one_sided_inverses(t, right=True)]
        yield f"{ring.ring_id} right inverses", units


def best_of(fn, kern, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(kern)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", help="also write the rows as JSON")
    ns = p.parse_args(argv)
    if _kernels.COMPILED is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`",
              file=sys.stderr)
        return 1
    rows = []
    print(f"{'workload':34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in workloads():
        tp, rp = best_of(fn, _kernels.PYTHON, ns.repeat)
        tc, rc = best_of(fn, _kernels.COMPILED, ns.repeat)
        if [list(r) for r in rp] != [list(r) for r in rc]:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        rows.append({"workload": name, "python_s": tp, "cython_s": tc, "speedup": tp / tc})
        print(f"{name:34} {tp * 1e3:10.2f} {tc * 1e3:10.2f} {tp / tc:7.1f}x")
    total_p = sum(r["python_s"] for r in rows)
    total_c = sum(r["cython_s"] for r in rows)
    print(f"{'total':34} {total_p * 1e3:10.2f} {total_c * 1e3:10.2f} {total_p / total_c:7.1f}x")
    if ns.json:
        with open(ns.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
