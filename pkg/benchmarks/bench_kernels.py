"""Compiled vs pure-Python kernel timings.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the signed fixed-point trace on its own and the brute-force Ext oracle
that calls it in its inner loop.  Both implementations are checked for equal
output before timing.
"""

import argparse
import random
import sys
import timeit
from itertools import permutations

from hilbexc import _kernels_py, oracle
from hilbexc.collection import ExceptionalCollection, with_serre_omega
from hilbexc.gvs import GradedDim
from hilbexc.induce import enumerate_labels

try:
    from hilbexc import _kernels as compiled
except ImportError:
    compiled = None


def trace_workload(seed=1):
    r = random.Random(seed)
    cases = []
    for n in (3, 4, 5):
        perms = list(permutations(range(n)))
        for _ in range(40):
            perm = list(r.choice(perms))
            degrees = [[r.randint(0, 3) for _ in range(r.randint(1, 4))] for _ in range(n)]
            cases.append((perm, degrees))
    return cases


def run_traces(kernel, cases):
    for perm, degrees in cases:
        kernel.signed_fixed_trace(perm, degrees)


def run_oracle(kernel, k=3, n=4):
    upper = {(0, 1): GradedDim({0: 2, 1: 1}), (0, 2): GradedDim({1: 1, 2: 2}), (1, 2): GradedDim({0: 3})}
    base = with_serre_omega(ExceptionalCollection.from_diagonal(k, upper))
    labels = enumerate_labels(k, n, base).labels[::4]
    saved = oracle.signed_fixed_trace
    oracle.signed_fixed_trace = kernel.signed_fixed_trace
    try:
        for a in labels:
            for b in labels:
                oracle.brute_force_ext(a, b, base.ext)
    finally:
        oracle.signed_fixed_trace = saved


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1

    cases = trace_workload()
    for perm, degrees in cases:
        assert compiled.signed_fixed_trace(perm, degrees) == _kernels_py.signed_fixed_trace(perm, degrees)

    rows = []
    for name, job in [
        (f"signed_fixed_trace x{len(cases)}", lambda kern: run_traces(kern, cases)),
        ("brute-force Ext, k=3 n=4", run_oracle),
    ]:
        t_py = best(lambda: job(_kernels_py), args.repeat)
        t_c = best(lambda: job(compiled), args.repeat)
        rows.append((name, t_py, t_c))

    print(f"{'workload':32s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}")
    for name, t_py, t_c in rows:
        print(f"{name:32s} {t_py:10.4f} {t_c:13.4f} {t_py / t_c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
