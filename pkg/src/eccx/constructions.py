"""Equienergetic and integral graph families built from cubic graphs and complete graphs."""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import HypothesisError, ParameterError
from .formats import serialize_graph6
from .graph import (
    Graph,
    disjoint_union,
    family,
    is_connected,
    join,
    line_graph,
    regularity,
    subdivision_edge_join,
    subdivision_vertex_join,
)
from .linalg import Spectrum, char_poly, energy, group, is_integral, spectra_equal, sym_eigenvalues
from .metrics import epsilon_spectrum, is_epsilon_irreducible

ENERGY_TOL = 1e-6


@dataclass(frozen=True)
class ConstructionReport:
    graphs: list[tuple[str, Graph]]
    spectra: list[Spectrum]
    energies: list[float]
    pairwise_cospectral: list[list[bool]]
    equienergetic: bool
    irreducible: list[bool]
    notes: str = ""
    expected_energy: float | None = None

    @property
    def non_cospectral(self) -> bool:
        k = len(self.graphs)
        return not any(self.pairwise_cospectral[i][j] for i in range(k) for j in range(k) if i != j)

    def to_json(self) -> dict:
        out = {
            "labels": [label for label, _ in self.graphs],
            "orders": [g.n for _, g in self.graphs],
            "graph6": [serialize_graph6(g) for _, g in self.graphs],
            "spectra": [s.to_json() for s in self.spectra],
            "energies": [float(f"{e:.12g}") for e in self.energies],
            "pairwise_cospectral": self.pairwise_cospectral,
            "equienergetic": self.equienergetic,
            "irreducible": self.irreducible,
            "notes": self.notes,
        }
        if self.expected_energy is not None:
            out["expected_energy"] = float(f"{self.expected_energy:.12g}")
        return out


def build_report(graphs: list[tuple[str, Graph]], notes: str = "",
                 expected_energy: float | None = None) -> ConstructionReport:
    spectra = [epsilon_spectrum(g) for _, g in graphs]
    energies = [energy(s) for s in spectra]
    k = len(graphs)
    cosp = [[i == j or spectra_equal(spectra[i], spectra[j]) for j in range(k)] for i in range(k)]
    return ConstructionReport(
        graphs=graphs,
        spectra=spectra,
        energies=energies,
        pairwise_cospectral=cosp,
        equienergetic=max(energies) - min(energies) < ENERGY_TOL,
        irreducible=[is_epsilon_irreducible(g) for _, g in graphs],
        notes=notes,
        expected_energy=expected_energy,
    )


# ---------------------------------------------------------------------------
# cubic graphs


def _cubic_edge_sets(n: int) -> Iterator[list[tuple[int, int]]]:
    """Backtracking over labelled cubic graphs with light symmetry breaking.

    The lowest vertex still missing edges is always completed next, its new
    neighbours are chosen as one combination, and untouched vertices are
    interchangeable so only the lowest-numbered untouched ones are offered.
    """
    deg = [0] * n
    adj = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []

    def rec() -> Iterator[list[tuple[int, int]]]:
        v = next((x for x in range(n) if deg[x] < 3), None)
        if v is None:
            yield list(edges)
            return
        need = 3 - deg[v]
        touched = [u for u in range(v + 1, n) if 0 < deg[u] < 3 and u not in adj[v]]
        fresh = [u for u in range(v + 1, n) if deg[u] == 0]
        for k_fresh in range(min(need, len(fresh)) + 1):
            for chosen in combinations(touched, need - k_fresh):
                nbrs = list(chosen) + fresh[:k_fresh]
                for u in nbrs:
                    adj[v].add(u)
                    adj[u].add(v)
                    deg[u] += 1
                    edges.append((v, u))
                deg[v] = 3
                yield from rec()
                deg[v] -= need
                for u in nbrs:
                    adj[v].discard(u)
                    adj[u].discard(v)
                    deg[u] -= 1
                    edges.pop()

    # the fresh-vertex rule already pins the neighbours of vertex 0 to 1, 2, 3
    if n >= 4:
        yield from rec()


def _spectral_key(g: Graph) -> tuple[float, ...]:
    return tuple(round(v, 6) + 0.0 for v in sym_eigenvalues(g.adjacency))


@lru_cache(maxsize=None)
def _cubic_classes(n: int) -> tuple[Graph, ...]:
    best: dict[tuple[float, ...], tuple[str, Graph]] = {}
    for edges in _cubic_edge_sets(n):
        g = Graph.from_edges(n, edges)
        if not is_connected(g):
            continue
        key = _spectral_key(g)
        code = serialize_graph6(g)
        if key not in best or code < best[key][0]:
            best[key] = (code, g)
    reps = sorted(best.values(), key=lambda item: item[0])
    return tuple(g.with_label(f"cubic{n}:{code}") for code, g in reps)


def enumerate_cubic(n: int) -> list[Graph]:
    """Connected cubic graphs on ``n`` vertices, one per adjacency spectrum.

    Representatives are the graph6-smallest labelled graphs met by the
    generator, listed in graph6 order.  Cospectral non-isomorphic graphs
    collapse to one entry.
    """
    if n % 2 or not 4 <= n <= 14:
        raise ParameterError(f"n must be even with 4 <= n <= 14, got {n}")
    return list(_cubic_classes(n))


def noncospectral_cubic_pair(t: int) -> tuple[Graph, Graph]:
    """The two graph6-smallest spectrally distinct connected cubic graphs on ``2t`` vertices."""
    if t < 3:
        raise HypothesisError(f"non-cospectral cubic pairs exist only for t >= 3, got t = {t}")
    if t > 7:
        raise ParameterError(f"t = {t} is beyond the supported range t <= 7")
    graphs = enumerate_cubic(2 * t)
    return graphs[0], graphs[1]


def _l2(g: Graph) -> Graph:
    return line_graph(line_graph(g)).with_label(f"L2({g.label})")


def energy_12t(t: int) -> float:
    return 72.0 * t - 56


def energy_6t1(t: int) -> float:
    return 24.0 * t - 14 + 2 * math.sqrt((6 * t - 7) ** 2 + 6 * t)


def equienergetic_pair_12t(t: int) -> ConstructionReport:
    """``L2(G) v L2(G)`` for a non-cospectral cubic pair on ``2t`` vertices (``12t`` vertices each)."""
    g1, g2 = noncospectral_cubic_pair(t)
    graphs = []
    for g in (g1, g2):
        h = _l2(g)
        graphs.append((f"{h.label} v {h.label}", join(h, h)))
    return build_report(graphs, f"self-joins of second line graphs, t={t}", energy_12t(t))


def equienergetic_pair_6t1(t: int) -> ConstructionReport:
    """``L2(G) v K1`` for a non-cospectral cubic pair on ``2t`` vertices (``6t+1`` vertices each)."""
    g1, g2 = noncospectral_cubic_pair(t)
    k1 = family("complete", [1])
    graphs = []
    for g in (g1, g2):
        h = _l2(g)
        graphs.append((f"{h.label} v K1", join(h, k1)))
    return build_report(graphs, f"second line graphs joined with K1, t={t}", energy_6t1(t))


SUBDIVISION_FAMILY_VARIANTS = ("sv_pair", "se_pair", "sv_triplet", "se_triplet")


def subdivision_join_family(g: Graph, t: int, variant: str) -> ConstructionReport:
    """Pairs ``G op H_i`` or triplets ``G op (H_i u H_j)`` with ``H_i`` second line graphs of a cubic pair.

    ``op`` is the subdivision-vertex join (``sv_*``) or the subdivision-edge
    join (``se_*``).  ``g`` must be regular of degree at least 2.
    """
    if variant not in SUBDIVISION_FAMILY_VARIANTS:
        raise ParameterError(f"variant must be one of {', '.join(SUBDIVISION_FAMILY_VARIANTS)}, got {variant!r}")
    r = regularity(g)
    if r is None or r < 2:
        raise HypothesisError(f"base graph must be regular with r >= 2 (got r = {r})")
    g1, g2 = noncospectral_cubic_pair(t)
    h1, h2 = _l2(g1), _l2(g2)
    op, sym = (subdivision_vertex_join, "svj") if variant.startswith("sv") else (subdivision_edge_join, "sej")
    base = g.label or "G"
    if variant.endswith("pair"):
        operands = [(h1.label, h1), (h2.label, h2)]
    else:
        operands = [
            (f"({h1.label} u {h2.label})", disjoint_union([h1, h2])),
            (f"({h1.label} u {h1.label})", disjoint_union([h1, h1])),
            (f"({h2.label} u {h2.label})", disjoint_union([h2, h2])),
        ]
    graphs = [(f"{base} {sym} {label}", op(g, h)) for label, h in operands]
    return build_report(graphs, f"{variant} on base {base}, t={t}")


# ---------------------------------------------------------------------------
# integral families


@dataclass(frozen=True)
class ScanRow:
    params: tuple[int, ...]
    is_integral: bool
    predicate: bool
    certificate: tuple[int, ...] | None = field(default=None)

    @property
    def agree(self) -> bool:
        return self.is_integral == self.predicate


def _square_root(x: int) -> int | None:
    if x < 0:
        return None
    s = math.isqrt(x)
    return s if s * s == x else None


def integer_roots(coeffs) -> tuple[int, ...] | None:
    """All roots of an integer polynomial if every one of them is an integer, else ``None``."""
    c = [int(x) for x in coeffs]
    if any(x != y for x, y in zip(c, coeffs)):
        return None
    roots: list[int] = []
    while len(c) > 1 and c[-1] == 0:
        roots.append(0)
        c.pop()
    while len(c) > 1:
        const = abs(c[-1])
        found = None
        for d in range(1, math.isqrt(const) + 1):
            if const % d:
                continue
            for cand in (d, -d, const // d, -(const // d)):
                val = 0
                for x in c:
                    val = val * cand + x
                if val == 0:
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            return None
        roots.append(found)
        # synthetic division by (x - found)
        out = [c[0]]
        for x in c[1:-1]:
            out.append(x + out[-1] * found)
        c = out
    return tuple(sorted(roots, reverse=True))


INTEGRAL_FAMILIES = ("k3_svjoin_kn", "k11_sejoin_kn", "join_union_complete")


def _scan_k3(n: int) -> ScanRow:
    g = subdivision_vertex_join(family("complete", [3]), family("complete", [n]))
    root = _square_root(12 * n + 9)
    return ScanRow((n,), is_integral(epsilon_spectrum(g)), root is not None, None if root is None else (root,))


def _scan_k11(n: int) -> ScanRow:
    g = subdivision_edge_join(family("complete", [11]), family("complete", [n]))
    root = _square_root(44 * n + 3645)
    return ScanRow((n,), is_integral(epsilon_spectrum(g)), root is not None, None if root is None else (root,))


def join_union_complete_quotient(n: int, m: int, l: int) -> np.ndarray:
    """Quotient of the eccentricity matrix of ``K_n v (K_m u K_l)`` over the three operands.

    Vertices of ``K_n`` have eccentricity 1, so the ``K_n`` block is ``J - I``
    and is coupled to the rest; the remaining eigenvalues are -1 and 0.
    """
    return np.array([[n - 1, m, l], [n, 0, 2 * l], [n, 2 * m, 0]], dtype=float)


def _scan_join_union(n: int, m: int, l: int) -> ScanRow:
    g = join(family("complete", [n]), disjoint_union([family("complete", [m]), family("complete", [l])]))
    roots = integer_roots(char_poly(join_union_complete_quotient(n, m, l)))
    return ScanRow((n, m, l), is_integral(epsilon_spectrum(g)), roots is not None, roots)


def integral_family_scan(name: str, lo: int, hi: int) -> list[ScanRow]:
    """Numeric integrality verdict next to the arithmetic predicate for each member of a family.

    ``k3_svjoin_kn`` and ``k11_sejoin_kn`` scan ``n`` in ``[lo, hi]``;
    ``join_union_complete`` scans ``lo <= n`` and ``lo <= m <= l`` with all three ``<= hi``.
    """
    if lo < 1 or hi < lo:
        raise ParameterError(f"bad range [{lo}, {hi}]")
    if hi > 300:
        raise ParameterError(f"range end {hi} exceeds the supported 300")
    if name == "k3_svjoin_kn":
        return [_scan_k3(n) for n in range(lo, hi + 1)]
    if name == "k11_sejoin_kn":
        return [_scan_k11(n) for n in range(lo, hi + 1)]
    if name == "join_union_complete":
        return [_scan_join_union(n, m, l)
                for n in range(lo, hi + 1) for m in range(lo, hi + 1) for l in range(m, hi + 1)]
    raise ParameterError(f"unknown family {name!r}; expected one of {', '.join(INTEGRAL_FAMILIES)}")
