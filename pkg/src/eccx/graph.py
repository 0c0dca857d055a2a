"""Simple undirected graphs with a fixed vertex order, standard families and operations.

Composite graphs always list their vertices in a fixed order so that block
structures are reproducible: operands in argument order, and for the
subdivision-based operations ``V(G1)``, then the subdivision vertices in
lexicographic edge order, then ``V(G2)``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import ParameterError, StructureError

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Equality is structural under the fixed vertex order (no isomorphism
    testing); ``label`` is provenance only and does not take part in it.
    """

    __slots__ = ("_adj", "label", "_edges")

    def __init__(self, adjacency, label: str | None = None):
        adj = np.array(adjacency, dtype=np.uint8, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ParameterError(f"adjacency must be square, got shape {adj.shape}")
        if adj.shape[0] < 1:
            raise ParameterError("a graph needs at least one vertex")
        if np.any(adj > 1):
            raise ParameterError("adjacency entries must be 0 or 1")
        if np.any(np.diagonal(adj)):
            raise ParameterError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ParameterError("adjacency must be symmetric")
        adj.setflags(write=False)
        self._adj = adj
        self.label = label
        self._edges: list[Edge] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], label: str | None = None) -> Graph:
        if n < 1:
            raise ParameterError(f"vertex count must be positive, got {n}")
        adj = np.zeros((n, n), dtype=np.uint8)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ParameterError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise ParameterError(f"self-loop at vertex {i}")
            adj[i, j] = adj[j, i] = 1
        return cls(adj, label)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only ``n x n`` uint8 adjacency matrix."""
        return self._adj

    def edges(self) -> list[Edge]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order (the edge order used everywhere)."""
        if self._edges is None:
            iu, ju = np.nonzero(np.triu(self._adj, 1))
            self._edges = list(zip(iu.tolist(), ju.tolist()))
        return list(self._edges)

    @property
    def num_edges(self) -> int:
        return int(self._adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1, dtype=np.int64)

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self._adj[v]).tolist()

    def with_label(self, label: str | None) -> Graph:
        g = Graph.__new__(Graph)
        g._adj, g.label, g._edges = self._adj, label, self._edges
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.num_edges}>"


# ---------------------------------------------------------------------------
# families

FAMILIES = ("complete", "complete_bipartite", "cycle", "path", "star", "petersen", "prism")


def _expect(name: str, params: Sequence[int], count: int) -> list[int]:
    if len(params) != count:
        raise ParameterError(f"{name} takes {count} parameter(s), got {len(params)}")
    out = []
    for p in params:
        if isinstance(p, bool) or int(p) != p:
            raise ParameterError(f"{name}: parameters must be integers, got {p!r}")
        out.append(int(p))
    return out


def family(name: str, params: Sequence[int] = ()) -> Graph:
    """Build a named graph.

    ``complete [p]``, ``complete_bipartite [p1, p2]``, ``cycle [p>=3]``,
    ``path [p]``, ``star [p]`` (``K_{1,p-1}``, ``p >= 2``), ``petersen []``
    and ``prism []`` (the triangular prism ``K3 x K2``).
    """
    if name == "complete":
        (p,) = _expect(name, params, 1)
        if p < 1:
            raise ParameterError(f"complete graph needs p >= 1, got {p}")
        adj = np.ones((p, p), dtype=np.uint8) - np.eye(p, dtype=np.uint8)
        return Graph(adj, f"K{p}")
    if name == "complete_bipartite":
        p1, p2 = _expect(name, params, 2)
        if p1 < 1 or p2 < 1:
            raise ParameterError(f"complete bipartite graph needs both sides >= 1, got {p1}, {p2}")
        edges = [(i, p1 + j) for i in range(p1) for j in range(p2)]
        return Graph.from_edges(p1 + p2, edges, f"K{p1},{p2}")
    if name == "cycle":
        (p,) = _expect(name, params, 1)
        if p < 3:
            raise ParameterError(f"cycle needs p >= 3, got {p}")
        return Graph.from_edges(p, [(i, (i + 1) % p) for i in range(p)], f"C{p}")
    if name == "path":
        (p,) = _expect(name, params, 1)
        if p < 1:
            raise ParameterError(f"path needs p >= 1, got {p}")
        return Graph.from_edges(p, [(i, i + 1) for i in range(p - 1)], f"P{p}")
    if name == "star":
        (p,) = _expect(name, params, 1)
        if p < 2:
            raise ParameterError(f"star needs p >= 2, got {p}")
        return Graph.from_edges(p, [(0, i) for i in range(1, p)], f"K1,{p - 1}")
    if name == "petersen":
        _expect(name, params, 0)
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner, "petersen")
    if name == "prism":
        _expect(name, params, 0)
        tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        rungs = [(i, i + 3) for i in range(3)]
        return Graph.from_edges(6, tri + rungs, "prism")
    raise ParameterError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


# ---------------------------------------------------------------------------
# operations


def complement(g: Graph) -> Graph:
    adj = 1 - g.adjacency
    np.fill_diagonal(adj, 0)
    return Graph(adj, f"co({g.label})" if g.label else None)


def _labels(gs: Sequence[Graph]) -> list[str]:
    return [g.label or "?" for g in gs]


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Block-diagonal union; vertices numbered by concatenation in list order."""
    if not gs:
        raise ParameterError("disjoint_union needs at least one graph")
    if len(gs) == 1:
        return gs[0]
    n = sum(g.n for g in gs)
    adj = np.zeros((n, n), dtype=np.uint8)
    off = 0
    for g in gs:
        adj[off:off + g.n, off:off + g.n] = g.adjacency
        off += g.n
    return Graph(adj, "(" + " u ".join(_labels(gs)) + ")")


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n = g1.n, g1.n + g2.n
    adj = np.ones((n, n), dtype=np.uint8)
    adj[:n1, :n1] = g1.adjacency
    adj[n1:, n1:] = g2.adjacency
    return Graph(adj, f"{g1.label or '?'} v {g2.label or '?'}")


def incidence_matrix(g: Graph) -> np.ndarray:
    """``n x q`` vertex-edge incidence matrix, columns in edge order."""
    edges = g.edges()
    r = np.zeros((g.n, len(edges)), dtype=np.int64)
    for k, (i, j) in enumerate(edges):
        r[i, k] = r[j, k] = 1
    return r


def line_graph(g: Graph) -> Graph:
    """Line graph; its vertex ``k`` is the ``k``-th edge of ``g`` in edge order.

    Graphs have at least one vertex, so an edgeless input raises
    :class:`StructureError` instead of returning the null graph.
    """
    edges = g.edges()
    if not edges:
        raise StructureError("line graph of an edgeless graph has no vertices")
    r = incidence_matrix(g)
    b = r.T @ r
    np.fill_diagonal(b, 0)
    return Graph((b > 0).astype(np.uint8), f"L({g.label or '?'})")


def subdivision(g: Graph) -> Graph:
    """Subdivide every edge: vertices ``0..n-1`` are ``V(G)``, ``n..n+q-1`` are ``I(G)``."""
    edges = g.edges()
    n = g.n + len(edges)
    adj = np.zeros((n, n), dtype=np.uint8)
    for k, (i, j) in enumerate(edges):
        u = g.n + k
        adj[i, u] = adj[u, i] = adj[j, u] = adj[u, j] = 1
    return Graph(adj, f"S({g.label or '?'})")


def _subdivision_join(g1: Graph, g2: Graph, attach_original: bool, symbol: str) -> Graph:
    if g1.num_edges == 0:
        raise StructureError(f"first operand of {symbol} must have at least one edge")
    s = subdivision(g1).adjacency
    p1, ns = g1.n, s.shape[0]
    n = ns + g2.n
    adj = np.zeros((n, n), dtype=np.uint8)
    adj[:ns, :ns] = s
    adj[ns:, ns:] = g2.adjacency
    side = slice(0, p1) if attach_original else slice(p1, ns)
    adj[side, ns:] = 1
    adj[ns:, side] = 1
    return Graph(adj, f"{g1.label or '?'} {symbol} {g2.label or '?'}")


def subdivision_vertex_join(g1: Graph, g2: Graph) -> Graph:
    """``S(G1)`` plus ``G2`` with every original vertex of ``G1`` joined to all of ``V(G2)``."""
    return _subdivision_join(g1, g2, True, "svj")


def subdivision_edge_join(g1: Graph, g2: Graph) -> Graph:
    """``S(G1)`` plus ``G2`` with every subdivision vertex joined to all of ``V(G2)``."""
    return _subdivision_join(g1, g2, False, "sej")


def regularity(g: Graph) -> int | None:
    deg = g.degrees()
    return int(deg[0]) if np.all(deg == deg[0]) else None


def is_connected(g: Graph) -> bool:
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for v in np.flatnonzero(adj[u] & ~seen):
            seen[v] = True
            queue.append(int(v))
    return bool(seen.all())


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    label = [-1] * g.n
    out = []
    for s in range(g.n):
        if label[s] >= 0:
            continue
        comp = [s]
        label[s] = len(out)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if label[v] < 0:
                    label[v] = len(out)
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out
