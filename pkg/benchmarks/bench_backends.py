#!/usr/bin/env python3
"""Compare the compiled kernel against the pure-Python fallback.

Two views:
  * kernel microbenchmarks, calling both kernel modules directly on the
    same inputs (scalar field operations and polynomial matrix products);
  * an end-to-end factorization workload, run in subprocesses with
    JUMAT_BACKEND forced to each backend in turn.

Usage: python benchmarks/bench_backends.py [--repeats N] [--skip-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from jumat import _core_py

try:
    from jumat import _core_cy
except ImportError:
    _core_cy = None


def rand_triple(rng, height):
    return _core_py.canon(
        rng.randint(-height, height),
        rng.randint(-height, height),
        rng.randint(1, height),
    )


def rand_poly(rng, n, degree, height):
    return tuple(
        tuple(tuple(rand_triple(rng, height) for _ in range(n)) for _ in range(n))
        for _ in range(degree + 1)
    )


def timed(fn, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return min(samples)


def bench_kernels(repeats):
    rng = random.Random(42)
    scalars = [rand_triple(rng, 10**9) for _ in range(2000)]
    pairs = list(zip(scalars[::2], scalars[1::2]))
    polys = [
        ("4x4 deg 6 x deg 6", rand_poly(rng, 4, 6, 1000), rand_poly(rng, 4, 6, 1000)),
        ("4x4 deg 20 x deg 4", rand_poly(rng, 4, 20, 1000), rand_poly(rng, 4, 4, 1000)),
        ("3x3 deg 12 x deg 12", rand_poly(rng, 3, 12, 1000), rand_poly(rng, 3, 12, 1000)),
    ]

    backends = [("python", _core_py)]
    if _core_cy is not None:
        backends.append(("cython", _core_cy))

    rows = []
    for label, runner in (
        ("scalar add", lambda k: [k.add(a, b) for a, b in pairs]),
        ("scalar mul", lambda k: [k.mul(a, b) for a, b in pairs]),
        ("scalar div", lambda k: [k.div(a, b) for a, b in pairs if b[0] or b[1]]),
    ):
        times = {name: timed(lambda k=kernel: runner(k), repeats)
                 for name, kernel in backends}
        rows.append((label, times))
    for label, a, b in polys:
        times = {name: timed(lambda k=kernel: k.matpoly_mul(a, b), repeats)
                 for name, kernel in backends}
        rows.append((f"matpoly {label}", times))

    print(f"{'kernel benchmark':<28}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, times in rows:
        py = times["python"]
        if "cython" in times:
            cy = times["cython"]
            print(f"{label:<28}{py * 1e3:>10.2f}ms{cy * 1e3:>10.2f}ms{py / cy:>9.1f}x")
        else:
            print(f"{label:<28}{py * 1e3:>10.2f}ms{'-':>12}{'-':>10}")


E2E_SCRIPT = """
import time
from jumat import BACKEND, Mode, SampleConfig, Sampler, factor, word_to_matrix
cfg = SampleConfig(nu=4, mode=Mode.COMPLEX, max_factors=5, max_phase_degree=3,
                   max_tangent_degree=2, coefficient_height=500, seed=11)
sampler = Sampler(cfg)
jobs = [sampler.word() for _ in range(30)]
start = time.time()
for w in jobs:
    res = factor(word_to_matrix(w))
    assert res.word == w
print(f"{BACKEND}: {time.time() - start:.2f}s for {len(jobs)} factorizations")
"""


def bench_end_to_end():
    print("\nend-to-end factorization workload (subprocess per backend)")
    for backend in ("python", "cython"):
        if backend == "cython" and _core_cy is None:
            print("cython: extension not built, skipped")
            continue
        env = dict(os.environ, JUMAT_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, "-c", E2E_SCRIPT], env=env,
            capture_output=True, text=True,
        )
        sys.stdout.write(proc.stdout or proc.stderr)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()
    if _core_cy is None:
        print("note: compiled kernel unavailable; showing pure-Python numbers only")
    bench_kernels(args.repeats)
    if not args.skip_e2e:
        bench_end_to_end()


if __name__ == "__main__":
    main()
