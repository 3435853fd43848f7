"""Compare the pure-Python and compiled search kernels on identical inputs.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]

Each benchmark feeds both backends the same flat distance matrix and
checks that every result matches before reporting times.
"""

from __future__ import annotations

import argparse
import time

from cupstack import families, _kernel_py
from cupstack._backend import compiled_available


def flat(g):
    return g.distances().flat_bytes()


def csr(g):
    starts, targets = [0], []
    for v in range(g.n):
        targets.extend(g.neighbors(v))
        starts.append(len(targets))
    return starts, targets


CASES = [
    ("decide P12 t=0", "decide", families.path(12), 0),
    ("decide petersen t=0", "decide", families.petersen(), 0),
    ("decide F12 t=0", "decide", families.f_graph(12), 0),
    ("minweight P11 t=0", "minweight", families.path(11), 0),
    ("minweight P12 t=3", "minweight", families.path(12), 3),
    ("bfs biwheel(24,{1,9,17})", "bfs", families.biwheel(24, (1, 9, 17)), None),
    ("bfs Q8", "bfs", families.hypercube(8), None),
]


def run_case(kernel, kind, g, t, budget):
    if kind == "decide":
        return kernel.decide_target(g.n, flat(g), t, budget)
    if kind == "minweight":
        return kernel.min_weight_target(g.n, flat(g), t, budget)
    starts, targets = csr(g)
    return [list(row) for row in kernel.all_pairs_bfs(g.n, starts, targets)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--budget", type=int, default=50_000_000)
    args = parser.parse_args()

    if not compiled_available():
        print("compiled backend is not built; showing python times only")
        backends = [("python", _kernel_py)]
    else:
        from cupstack import _speedups

        backends = [("python", _kernel_py), ("compiled", _speedups)]

    width = max(len(name) for name, *_ in CASES)
    header = f"{'case':<{width}}  " + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, kind, g, t in CASES:
        times = []
        results = []
        for _, kernel in backends:
            best = float("inf")
            result = None
            for _ in range(args.repeat):
                start = time.perf_counter()
                result = run_case(kernel, kind, g, t, args.budget)
                best = min(best, time.perf_counter() - start)
            times.append(best)
            results.append(result)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backend results differ on {name}")
        row = f"{name:<{width}}  " + "".join(f"{t_:>11.4f}s" for t_ in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
