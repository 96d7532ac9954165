"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from activity_forge import _backend, _pykernels
from activity_forge.activity import EdgeOrder
from activity_forge.graph import Multigraph


def grid(rows, cols):
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return Multigraph.from_edges(rows * cols, pairs)


def complete(n):
    return Multigraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cases():
    g44 = grid(4, 4)
    k7 = complete(7)
    g34 = grid(3, 4)
    k6 = complete(6)
    yield "activity_histogram grid4x4", lambda k: k.activity_histogram(
        g44.n_vertices, g44.us, g44.vs, EdgeOrder.random(g44.m, 1).rank)
    yield "activity_histogram K7", lambda k: k.activity_histogram(
        k7.n_vertices, k7.us, k7.vs, EdgeOrder.random(k7.m, 1).rank)
    yield "forest_activities grid3x4", lambda k: k.forest_activities(
        g34.n_vertices, g34.us, g34.vs, EdgeOrder.identity(g34.m).rank)
    yield "subset_histogram grid3x4 (2^17)", lambda k: k.subset_histogram(g34.n_vertices, g34.us, g34.vs)
    yield "subset_profile_histogram K6 (2^15)", lambda k: k.subset_profile_histogram(k6.n_vertices, k6.us, k6.vs)


def best_of(fn, kern, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kern)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = _backend._ckernels
    if compiled is None:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'case':38s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in cases():
        t_py = best_of(fn, _pykernels, args.repeat)
        if compiled is None:
            print(f"{name:38s} {t_py:10.3f} {'-':>10s} {'-':>8s}")
            continue
        assert fn(compiled) == fn(_pykernels)
        t_c = best_of(fn, compiled, args.repeat)
        print(f"{name:38s} {t_py:10.3f} {t_c:10.4f} {t_py / t_c:7.0f}x")


if __name__ == "__main__":
    main()
