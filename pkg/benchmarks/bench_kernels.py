"""Compare the numba kernels with their pure-numpy fallbacks.

Usage::

    python benchmarks/bench_kernels.py [--rank 6] [--repeat 5] [--sweep 7]

The kernel timings call both implementations directly. The sweep timing runs
``verify_correspondence`` in a fresh interpreter per backend, because the
backend is chosen once at import time from ``TLWEYL_NUMBA``.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from tlweyl import _kernels
from tlweyl.dense import commuting_sets, to_partner
from tlweyl.tl import enumerate_diagrams


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def kernel_inputs(n):
    ds = np.array([d.partner for d in enumerate_diagrams(n)], dtype=_kernels.INDEX_DTYPE)
    idx = np.random.default_rng(0).integers(len(ds), size=(200_000, 2))
    tops, bottoms = ds[idx[:, 0]], ds[idx[:, 1]]
    sets = np.array([to_partner(q, n) for q in commuting_sets(n)], dtype=_kernels.INDEX_DTYPE)
    sets = sets[np.random.default_rng(1).integers(len(sets), size=200_000)]
    return tops, bottoms, sets


def sweep_time(rank, backend):
    env = dict(os.environ, TLWEYL_NUMBA="1" if backend == "numba" else "0")
    code = (
        "import time; from tlweyl.categorify import verify_correspondence as v; v(2, oracle=False);"
        f"t=time.perf_counter(); r=v({rank}, oracle=False); print(time.perf_counter()-t, r.words, r.ok)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    seconds, words, ok = out.stdout.split()
    return float(seconds), int(words), ok == "True"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rank", type=int, default=6, help="rank for the kernel micro-benchmarks")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sweep", type=int, default=7, help="rank for the full verification sweep (0 to skip)")
    args = parser.parse_args(argv)

    tops, bottoms, sets = kernel_inputs(args.rank)
    print(f"kernels at rank {args.rank}, {len(tops)} rows (best of {args.repeat})")
    baseline = {}
    for name, (compose, update) in _kernels.IMPLEMENTATIONS.items():
        compose(tops[:10], bottoms[:10])  # compile outside the timing
        update(sets[:10], 0)
        tc = best_of(lambda: compose(tops, bottoms), args.repeat)
        tu = best_of(lambda: [update(sets, i) for i in range(args.rank)], args.repeat)
        baseline[name] = (tc, tu)
        print(f"  {name:6s} compose {tc * 1e3:9.2f} ms   dense update x{args.rank} {tu * 1e3:9.2f} ms")
    if {"numba", "numpy"} <= baseline.keys():
        (nc, nu), (pc, pu) = baseline["numba"], baseline["numpy"]
        print(f"  speed-up compose {pc / nc:.1f}x, update {pu / nu:.1f}x")

    if args.sweep:
        print(f"verification sweep at rank {args.sweep} (all reduced words, oracle off)")
        for backend in ("numba", "numpy"):
            seconds, words, ok = sweep_time(args.sweep, backend)
            print(f"  {backend:6s} {seconds:8.2f} s for {words} words, ok={ok}")


if __name__ == "__main__":
    main()
