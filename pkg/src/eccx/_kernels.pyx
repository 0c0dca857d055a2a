# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: cyclic Jacobi sweeps and all-sources BFS.

Same signatures and return conventions as ``eccx._pykernels``.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


def jacobi_eigenvalues(m, double rel_tol=1e-11, int max_sweeps=60):
    """Return ``(eigenvalues, sweeps, converged)`` for a symmetric matrix.

    Row-cyclic ordering; stops once the off-diagonal Frobenius norm falls
    below ``rel_tol * ||m||_F``.  Eigenvalues are unsorted.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=2] arr = np.array(m, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] a = arr
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, p, q, r
    cdef double total = 0.0, off, apq, theta, t, c, s, arp, arq, app, aqq
    cdef int sweep = 0
    cdef bint converged = False

    for i in range(n):
        for j in range(n):
            total += a[i, j] * a[i, j]
    cdef double target = rel_tol * sqrt(total)

    while True:
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        if sqrt(off) < target or off == 0.0:
            converged = True
            break
        if sweep >= max_sweeps:
            break
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    arp = a[r, p]
                    arq = a[r, q]
                    a[r, p] = c * arp - s * arq
                    a[r, q] = s * arp + c * arq
                for r in range(n):
                    arp = a[p, r]
                    arq = a[q, r]
                    a[p, r] = c * arp - s * arq
                    a[q, r] = s * arp + c * arq
                a[p, q] = 0.0
                a[q, p] = 0.0

    eig = np.empty(n, dtype=np.float64)
    cdef double[::1] ev = eig
    for i in range(n):
        ev[i] = a[i, i]
    return eig, sweep, converged


def bfs_distances(adjacency):
    """All-pairs hop distances of a 0/1 adjacency matrix; ``-1`` marks unreachable pairs."""
    cdef const unsigned char[:, ::1] adj = np.ascontiguousarray(adjacency, dtype=np.uint8)
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t u, v, k, head, tail, src

    deg = np.zeros(n + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] start = deg
    for u in range(n):
        for v in range(n):
            if adj[u, v]:
                start[u + 1] += 1
    for u in range(n):
        start[u + 1] += start[u]
    nbr_arr = np.empty(max(start[n], 1), dtype=np.intp)
    cdef Py_ssize_t[::1] nbr = nbr_arr
    k = 0
    for u in range(n):
        for v in range(n):
            if adj[u, v]:
                nbr[k] = v
                k += 1

    dist_arr = np.full((n, n), -1, dtype=np.int64)
    cdef long long[:, ::1] dist = dist_arr
    queue_arr = np.empty(max(n, 1), dtype=np.intp)
    cdef Py_ssize_t[::1] queue = queue_arr

    for src in range(n):
        dist[src, src] = 0
        queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for k in range(start[u], start[u + 1]):
                v = nbr[k]
                if dist[src, v] < 0:
                    dist[src, v] = dist[src, u] + 1
                    queue[tail] = v
                    tail += 1
    return dist_arr
