"""Compare the compiled and pure-Python kernel backends.

Usage::

    python benchmarks/bench_kernels.py [-n 7] [--repeat 3]

Every kernel runs over all graphs of order ``n`` (built-in enumeration);
results from the two backends are also compared, so a speed-up never hides
a disagreement.
"""

from __future__ import annotations

import argparse
import sys
import time

from factorcrit.enumeration import enumerate_graphs
from factorcrit.kernels import available_backends, load_backend

CASES = {
    "max_matching": lambda K, g: K.max_matching(g.n, g.masks, g.full_mask),
    "kfc_violation(k=2)": lambda K, g: K.kfc_violation(g.n, g.masks, 2),
    "kfc_violation(k=3)": lambda K, g: K.kfc_violation(g.n, g.masks, 3),
    "max_deficiency_set": lambda K, g: K.max_deficiency_set(g.n, g.masks),
    "canonical_code": lambda K, g: K.canonical_code(g.n, list(g.masks)),
    "find_minor_blocks(K33)": lambda K, g: K.find_minor_blocks(g.n, list(g.masks), 6),
}


def bench(kernel, fn, graphs, repeat: int) -> tuple[float, list]:
    best = float("inf")
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [fn(kernel, g) for g in graphs]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-n", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the Python backend is available", file=sys.stderr)
    graphs = list(enumerate_graphs(args.n))
    print(f"{len(graphs)} graphs on {args.n} vertices, best of {args.repeat}")
    print(f"{'kernel':<24}" + "".join(f"{b:>12}" for b in backends) + f"{'speed-up':>10}")
    mismatch = False
    for name, fn in CASES.items():
        times = {}
        results = {}
        for b in backends:
            times[b], results[b] = bench(load_backend(b), fn, graphs, args.repeat)
        row = f"{name:<24}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['cython']:>9.1f}x"
            if results["python"] != results["cython"]:
                mismatch = True
                row += "  MISMATCH"
        print(row)
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
