"""Compare the compiled kernel extension against the pure-Python fallback.

Run without arguments to benchmark every available backend and print a
comparison table:

    python3 benchmarks/bench_backends.py

Each backend is timed in a fresh subprocess with NORMGRAPH_BACKEND set, so
the measurement reflects exactly what a user of that backend would get.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

DEFAULT_GROUPS = "S3xS3,S5,Q8xD10,TwoFrob294"


def _workloads(name):
    # Built lazily so the import happens after NORMGRAPH_BACKEND is honoured.
    from normgraph import catalog_group, graphs
    from normgraph._core import kernels

    g = catalog_group(name)
    ctx = kernels.prepare(g.table, g.inv)
    cyc = g.cyclic_masks()
    delta = graphs.delta_norm(g)
    masks = delta.out_masks
    nd = len(masks)

    # pair-closure seeds: deterministic sample so both backends do identical work
    pairs = []
    step = max(1, g.order // 14)
    for x in range(1, g.order, step):
        for y in range(x + 1, g.order, step):
            pairs.append((1 << x) | (1 << y) | 1)
    pairs = pairs[:200]

    def run_closure():
        for seed in pairs:
            kernels.closure(ctx, seed)

    def run_rows():
        for m in cyc:
            kernels.normalizer(ctx, m)

    def run_scc():
        kernels.scc(masks, nd)

    def run_diameter():
        kernels.diameter(masks, nd)

    return [
        ("closure", run_closure),
        ("rows", run_rows),
        ("scc", run_scc),
        ("diameter", run_diameter),
    ]


def bench_one(groups, repeat):
    import normgraph

    results = []
    for name in groups:
        for workload, fn in _workloads(name):
            best = min(_time(fn) for _ in range(repeat))
            results.append({"group": name, "workload": workload, "seconds": best})
    return {"backend": normgraph.BACKEND, "results": results}


def _time(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _spawn(backend, args):
    env = dict(os.environ, NORMGRAPH_BACKEND=backend)
    cmd = [
        sys.executable,
        os.path.abspath(__file__),
        "--backend",
        backend,
        "--groups",
        args.groups,
        "--repeat",
        str(args.repeat),
    ]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def compare(args):
    from normgraph._core import available_backends

    reports = {}
    for backend in available_backends():
        print(f"benchmarking backend: {backend} ...", file=sys.stderr)
        reports[backend] = _spawn(backend, args)

    names = list(reports)
    header = f"{'group':<12} {'workload':<10}" + "".join(f" {b:>12}" for b in names)
    if "compiled" in reports and "python" in reports:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    keyed = {
        b: {(r["group"], r["workload"]): r["seconds"] for r in rep["results"]}
        for b, rep in reports.items()
    }
    any_rep = next(iter(reports.values()))
    for r in any_rep["results"]:
        key = (r["group"], r["workload"])
        line = f"{key[0]:<12} {key[1]:<10}"
        for b in names:
            line += f" {keyed[b][key] * 1e3:>10.2f}ms"
        if "compiled" in keyed and "python" in keyed:
            ratio = keyed["python"][key] / max(keyed["compiled"][key], 1e-9)
            line += f" {ratio:>8.1f}x"
        print(line)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--backend", help="run one backend and emit JSON (internal)")
    ap.add_argument("--groups", default=DEFAULT_GROUPS, help="comma-separated catalog names")
    ap.add_argument("--repeat", type=int, default=5, help="repetitions per workload; best is kept")
    args = ap.parse_args(argv)

    if args.backend:
        report = bench_one(args.groups.split(","), args.repeat)
        json.dump(report, sys.stdout)
        print()
        return 0
    compare(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
