"""Benchmark the compiled kernels against the pure-Python twins.

Builds a mixed workload of random instances, then times the three kernel
entry points (solution validity flags, greedy hierarchical fill, collapsing)
on each backend over identical inputs. Results are checked for equality
while timing, so a divergence aborts the run.

Usage: python benchmarks/bench_kernels.py [--count N] [--seed S] [--repeats R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from superstring import GeneratorSpec, build_graph, generate, zigzag
from superstring import _pykernels

try:
    from superstring import _ckernels
except ImportError:
    _ckernels = None

WORKLOAD = (
    ("short(n=5,max_len=3,alphabet=2,seed=1)", 4),
    ("short(n=6,max_len=3,alphabet=3,seed=2)", 3),
    ("uniform(n=4,min_len=1,max_len=4,alphabet=3,seed=3)", 4),
    ("uniform(n=5,min_len=2,max_len=6,alphabet=2,seed=4)", 2),
    ("spectrum(str_len=20,k=4,alphabet=3,seed=5)", 2),
    ("tough(n=12,seed=6)", 1),
)


def build_workload(count: int, seed: int):
    """A list of (arrays, up, down) triples with doubled zig-zag counters."""
    items = []
    weights = sum(w for _, w in WORKLOAD)
    for text, share in WORKLOAD:
        spec = GeneratorSpec.parse(text)
        for i in range(count * share // weights):
            ins, _ = generate(spec, seed + i)
            hg = build_graph(ins)
            d = zigzag(hg, range(len(ins)))
            items.append((hg.arrays(), d.up * 2, d.down * 2))
    return items


def bench_flags(mod, items):
    out = []
    t0 = time.perf_counter()
    for g, up, down in items:
        out.append(mod.solution_flags(g, up, down))
    return time.perf_counter() - t0, out


def bench_gha(mod, items):
    out = []
    t0 = time.perf_counter()
    for g, up, _ in items:
        u = np.zeros(len(up), dtype=np.int64)
        d = np.zeros(len(up), dtype=np.int64)
        mod.gha_fill(g, u, d)
        out.append((u, d))
    return time.perf_counter() - t0, out


def bench_ca(mod, items):
    out = []
    t0 = time.perf_counter()
    for g, up, down in items:
        u = up.copy()
        d = down.copy()
        mod.ca_inplace(g, u, d)
        out.append((u, d))
    return time.perf_counter() - t0, out


BENCHES = (("solution_flags", bench_flags),
           ("gha_fill", bench_gha),
           ("ca_inplace", bench_ca))


def check_equal(name, py_out, c_out):
    for i, (a, b) in enumerate(zip(py_out, c_out)):
        if isinstance(a, tuple):
            same = all(np.array_equal(x, y) for x, y in zip(a, b))
        else:
            same = a == b
        if not same:
            raise SystemExit(f"{name}: backends disagree on item {i}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=3000,
                    help="approximate number of instances (default 3000)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=3,
                    help="timing repeats; the best run is reported")
    args = ap.parse_args()

    items = build_workload(args.count, args.seed)
    print(f"workload: {len(items)} instances, "
          f"{sum(len(g.pref) for g, _, _ in items)} vertices total")
    if _ckernels is None:
        print("compiled backend not built; timing the pure backend only")

    header = f"{'kernel':<16} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn in BENCHES:
        best_py = min(fn(_pykernels, items)[0] for _ in range(args.repeats))
        _, py_out = fn(_pykernels, items)
        if _ckernels is None:
            print(f"{name:<16} {best_py:>10.3f} {'-':>13} {'-':>9}")
            continue
        best_c = min(fn(_ckernels, items)[0] for _ in range(args.repeats))
        _, c_out = fn(_ckernels, items)
        check_equal(name, py_out, c_out)
        print(f"{name:<16} {best_py:>10.3f} {best_c:>13.3f} "
              f"{best_py / best_c:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
