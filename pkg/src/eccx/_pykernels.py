"""Pure-Python (numpy) versions of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations

from collections import deque

import numpy as np


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # circle method: n-1 rounds of n/2 disjoint pairs covering every pair once
    m = n + (n % 2)
    ring = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            p, q = ring[k], ring[m - 1 - k]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        if ps:
            rounds.append((np.array(ps), np.array(qs)))
        ring = [ring[0], ring[-1]] + ring[1:-1]
    return rounds


def jacobi_eigenvalues(m, rel_tol: float = 1e-11, max_sweeps: int = 60):
    """Return ``(eigenvalues, sweeps, converged)`` for a symmetric matrix.

    Each sweep visits every off-diagonal pair once, in round-robin order so
    that the rotations of one round touch disjoint rows and can be applied
    together as array operations.
    """
    a = np.array(m, dtype=np.float64, copy=True)
    n = a.shape[0]
    target = rel_tol * np.sqrt(np.sum(a * a))
    rounds = _round_robin(n)
    iu = np.triu_indices(n, 1)
    sweep = 0
    while True:
        # summed directly: subtracting the diagonal from the full norm cancels badly
        off = np.sum(np.square(a[iu])) * 2.0
        if off <= 0.0 or np.sqrt(off) < target:
            return np.diag(a).copy(), sweep, True
        if sweep >= max_sweeps:
            return np.diag(a).copy(), sweep, False
        sweep += 1
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            theta = np.zeros_like(apq)
            theta[active] = (a[q, q][active] - a[p, p][active]) / (2.0 * apq[active])
            # t = sign(theta) / (|theta| + sqrt(theta^2 + 1)), written to avoid overflowing theta^2
            big = np.abs(theta) > 1e150
            root = np.where(big, np.abs(theta), np.sqrt(np.where(big, 0.0, theta) ** 2 + 1.0))
            t = np.where(active, np.sign(theta + (theta == 0)) / (np.abs(theta) + root), 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * cp - s * cq
            a[:, q] = s * cp + c * cq
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            a[p, q] = 0.0
            a[q, p] = 0.0


def bfs_distances(adjacency) -> np.ndarray:
    """All-pairs hop distances of a 0/1 adjacency matrix; ``-1`` marks unreachable pairs."""
    adj = np.asarray(adjacency)
    n = adj.shape[0]
    nbrs = [np.flatnonzero(adj[u]).tolist() for u in range(n)]
    dist = np.full((n, n), -1, dtype=np.int64)
    for src in range(n):
        row = [-1] * n
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in nbrs[u]:
                if row[v] < 0:
                    row[v] = du
                    queue.append(v)
        dist[src] = row
    return dist
