"""Benchmark the pure and compiled kernel backends.

Micro benchmarks time the inner-loop primitives on both implementations
in-process; the end-to-end benchmark times relation_ideal in fresh
subprocesses with TRIGIDEAL_BACKEND forced each way.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time
from fractions import Fraction

from trigideal._kernel import kernel_py

try:
    from trigideal._kernel import kernel_cy
except ImportError:
    kernel_cy = None


def rand_terms(rng, width, n_terms):
    out = {}
    while len(out) < n_terms:
        e = tuple(rng.randint(0, 6) for _ in range(width))
        out[e] = Fraction(rng.randint(-99, 99), rng.randint(1, 9))
    return out


def timeit(fn, repeat):
    best = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return min(best), statistics.median(best)


def micro(repeat):
    rng = random.Random(7)
    width = 10
    a = rand_terms(rng, width, 40)
    b = rand_terms(rng, width, 40)
    exps = [tuple(rng.randint(0, 6) for _ in range(width)) for _ in range(2000)]
    pairs = list(zip(exps[::2], exps[1::2]))
    shift = tuple([1, 0] * (width // 2))
    coeff = Fraction(3, 7)

    cases = {
        "mul_terms 40x40": lambda impl: impl.mul_terms(a, b),
        "sub_scaled 40": lambda impl: impl.sub_scaled(dict(a), b, coeff, shift),
        "exp_mul x1000": lambda impl: [impl.exp_mul(u, v) for u, v in pairs],
        "block key x2000": lambda impl: [
            impl.monomial_key(impl.KIND_BLOCK, 4, u) for u in exps
        ],
        "leading_exp": lambda impl: impl.leading_exp(kernel_py.KIND_BLOCK, 4, a),
    }

    backends = [("pure", kernel_py)]
    if kernel_cy is not None:
        backends.append(("compiled", kernel_cy))

    print("== micro benchmarks (best of %d) ==" % repeat)
    for label, fn in cases.items():
        row = ["%-18s" % label]
        baseline = None
        for name, impl in backends:
            best, _ = timeit(lambda impl=impl, fn=fn: fn(impl), repeat)
            if baseline is None:
                baseline = best
            row.append("%s %.3f ms" % (name, best * 1e3))
        if kernel_cy is not None and baseline:
            row.append("speedup %.2fx" % (baseline / best))
        print("  ".join(row))


END_TO_END = (
    "from fractions import Fraction\n"
    "from trigideal.algebraic import AlgebraicNumber\n"
    "from trigideal.trig import relation_ideal\n"
    "import time\n"
    "pts = [AlgebraicNumber.from_rational(Fraction(p))"
    " for p in (2, 1, Fraction(1, 2), Fraction(1, 4))]\n"
    "t0 = time.perf_counter()\n"
    "relation_ideal(pts)\n"
    "print('%.3f' % (time.perf_counter() - t0))\n"
)


def end_to_end(repeat):
    print("== end-to-end relation_ideal(2, 1, 1/2, 1/4) (best of %d) ==" % repeat)
    choices = ["pure"] + (["compiled"] if kernel_cy is not None else [])
    for choice in choices:
        env = dict(os.environ, TRIGIDEAL_BACKEND=choice)
        best = None
        for _ in range(repeat):
            proc = subprocess.run(
                [sys.executable, "-c", END_TO_END],
                env=env,
                capture_output=True,
                text=True,
                check=True,
            )
            t = float(proc.stdout.strip())
            best = t if best is None or t < best else best
        print("%-10s %.3f s" % (choice, best))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if kernel_cy is None:
        print("note: compiled backend unavailable; timing pure only")
    micro(args.repeat)
    end_to_end(max(2, args.repeat // 2))


if __name__ == "__main__":
    main()
