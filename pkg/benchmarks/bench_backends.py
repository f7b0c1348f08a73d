"""Time the numba and numpy search kernels on the same graphs.

    python benchmarks/bench_backends.py [--repeat 3] [--seed 7]

Both backends must agree on dim, bases and node counts; the script exits
non-zero if they do not.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

import networkx as nx

from metricbasis import kernels
from metricbasis.graph import from_edge_list
from metricbasis.constructions import glue_chain, lemma_family, named_graph
from metricbasis.resolver import analyze
from metricbasis.theorems import random_connected_graph


def workload(seed: int):
    rng = random.Random(seed)
    cases = [
        ("fig1c", named_graph("fig1c")),
        ("dense k=4 m=3", lemma_family(4, 3)),
        ("fig2a chain x3", glue_chain(named_graph("fig2a"), 3, "v1", "v3")),
        ("hypercube Q5", from_edge_list(32, nx.convert_node_labels_to_integers(nx.hypercube_graph(5)).edges())),
    ]
    for n in (24, 30, 40):
        cases.append((f"random n={n} p=0.5", random_connected_graph(n, rng, 0.5)))
    return cases


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)
    backends = ["numpy"] + (["numba"] if kernels.numba_available() else [])
    if "numba" in backends:
        analyze(named_graph("fig4"), backend="numba")  # pay the JIT cost up front
    print(f"{'graph':<22}{'n':>4}{'dim':>5}{'bases':>7}{'nodes':>9}" + "".join(f"{b:>11}" for b in backends) + "   speedup")
    mismatch = False
    for name, g in workload(args.seed):
        times, results = {}, {}
        for b in backends:
            times[b], results[b] = best_of(lambda: analyze(g, backend=b), args.repeat)
        ref = results["numpy"]
        for b in backends[1:]:
            r = results[b]
            if (r.dim, r.bases, r.nodes) != (ref.dim, ref.bases, ref.nodes):
                mismatch = True
                print(f"  MISMATCH on {name}: {b} disagrees with numpy", file=sys.stderr)
        row = f"{name:<22}{g.n:>4}{ref.dim:>5}{len(ref.bases):>7}{ref.nodes:>9}"
        row += "".join(f"{times[b] * 1e3:>9.1f}ms" for b in backends)
        if "numba" in times:
            row += f"   {times['numpy'] / times['numba']:>6.1f}x"
        print(row)
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
