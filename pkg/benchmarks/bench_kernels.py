"""Time the compiled kernels against the numpy fallback.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from eccx import _backend
from eccx.constructions import noncospectral_cubic_pair
from eccx.graph import family, join, line_graph, subdivision_vertex_join
from eccx.metrics import eccentricity_matrix


def _cases():
    prism, _ = noncospectral_cubic_pair(3)
    h = line_graph(line_graph(prism))
    return [
        ("K3 svj K127 (133)", subdivision_vertex_join(family("complete", [3]), family("complete", [127]))),
        ("L2(prism) v L2(prism) (36)", join(h, h)),
        ("petersen (10)", family("petersen")),
        ("C200 (200)", family("cycle", [200])),
    ]


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    py = _backend.kernels("python")
    try:
        cy = _backend.kernels("cython")
    except ImportError:
        print("compiled extension not built; only the python backend is available")
        cy = None

    print(f"{'case':32} {'kernel':8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, g in _cases():
        eps = eccentricity_matrix(g).astype(float)
        for kernel, arg in (("jacobi", eps), ("bfs", g.adjacency)):
            fn_py = (lambda: py.jacobi_eigenvalues(arg)) if kernel == "jacobi" else (lambda: py.bfs_distances(arg))
            t_py = _best(fn_py, args.repeat)
            if cy is None:
                print(f"{name:32} {kernel:8} {t_py:10.4f} {'-':>10} {'-':>8}")
                continue
            fn_cy = (lambda: cy.jacobi_eigenvalues(arg)) if kernel == "jacobi" else (lambda: cy.bfs_distances(arg))
            t_cy = _best(fn_cy, args.repeat)
            if kernel == "jacobi":
                a = np.sort(py.jacobi_eigenvalues(arg)[0])
                b = np.sort(cy.jacobi_eigenvalues(arg)[0])
                assert np.max(np.abs(a - b)) < 1e-8
            else:
                assert np.array_equal(py.bfs_distances(arg), cy.bfs_distances(arg))
            print(f"{name:32} {kernel:8} {t_py:10.4f} {t_cy:10.4f} {t_py / t_cy:8.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
