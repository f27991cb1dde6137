"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --p 40 80 120 --k 10 100
"""

import argparse
import timeit

from diverse_opt._backend import AVAILABLE
from diverse_opt.dag import dijkstra, orient_undirected
from diverse_opt.flow import min_cost_flow
from diverse_opt.graph import generate_grid
from diverse_opt.paths import expand_dag


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat)) * 1e3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, nargs="+", default=[40, 80, 120])
    ap.add_argument("--k", type=int, nargs="+", default=[10, 100])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = sorted(AVAILABLE)
    print(f"{'kernel':<10}{'p':>5}{'k':>5}" + "".join(f"{b + ' ms':>14}" for b in backends)
          + f"{'speedup':>10}")
    for p in args.p:
        g, s, t = generate_grid(p)
        d = g.to_directed()
        row = [best_of(lambda b=b: dijkstra(d, s, b), args.repeat) for b in backends]
        print(_fmt("dijkstra", p, "-", row, backends))
        dag = orient_undirected(g, s, t)
        for k in args.k:
            net = expand_dag(dag, k).network
            row = [best_of(lambda b=b: min_cost_flow(net, k, backend=b, check=False), args.repeat)
                   for b in backends]
            print(_fmt("ssp", p, k, row, backends))


def _fmt(name, p, k, row, backends):
    text = f"{name:<10}{p:>5}{k:>5}" + "".join(f"{x:>14.2f}" for x in row)
    if "compiled" in backends:
        speed = row[backends.index("python")] / row[backends.index("compiled")]
        text += f"{speed:>9.1f}x"
    return text


if __name__ == "__main__":
    main()
