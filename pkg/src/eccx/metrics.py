"""Distances, eccentricities, the eccentricity matrix and quantities derived from it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import _backend
from .errors import ConnectivityError
from .graph import Graph, is_connected
from .linalg import GROUP_TOL, Spectrum, group, sym_eigenvalues


@dataclass(frozen=True)
class EccentricityProfile:
    distances: np.ndarray
    ecc: np.ndarray
    radius: int
    diameter: int
    eps_matrix: np.ndarray
    eccentric_graph: Graph

    @property
    def n(self) -> int:
        return self.distances.shape[0]


def distance_matrix(g: Graph) -> np.ndarray:
    """Hop-distance matrix (int64) from one BFS per vertex; raises on disconnected input."""
    d = _backend.active.bfs_distances(g.adjacency)
    if (d < 0).any():
        name = f"graph {g.label}" if g.label else "graph"
        raise ConnectivityError(f"{name} is disconnected")
    return d


def profile(g: Graph) -> EccentricityProfile:
    d = distance_matrix(g)
    ecc = d.max(axis=1)
    keep = d == np.minimum.outer(ecc, ecc)
    np.fill_diagonal(keep, False)
    eps = np.where(keep, d, 0)
    for arr in (d, ecc, eps):
        arr.setflags(write=False)
    return EccentricityProfile(
        distances=d,
        ecc=ecc,
        radius=int(ecc.min()),
        diameter=int(ecc.max()),
        eps_matrix=eps,
        eccentric_graph=Graph(keep.astype(np.uint8), f"{g.label}^e" if g.label else None),
    )


def eccentricity_matrix(g: Graph) -> np.ndarray:
    return profile(g).eps_matrix


def epsilon_spectrum(g: Graph, tol: float = GROUP_TOL, backend: str | None = None) -> Spectrum:
    return group(sym_eigenvalues(eccentricity_matrix(g), backend=backend), tol)


def is_self_centered(g: Graph) -> bool:
    p = profile(g)
    return p.radius == p.diameter


def is_epsilon_irreducible(g: Graph) -> bool:
    """Whether the eccentricity matrix is irreducible, i.e. the eccentric graph is connected."""
    return is_connected(profile(g).eccentric_graph)


def support_components(m) -> int:
    """Number of connected components of the nonzero pattern of a symmetric matrix (union-find)."""
    a = np.asarray(m)
    n = a.shape[0]
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in zip(*np.nonzero(np.triu(a, 1))):
        ri, rj = find(int(i)), find(int(j))
        if ri != rj:
            parent[ri] = rj
    return len({find(x) for x in range(n)})


def epsilon_wiener(g: Graph) -> Fraction:
    """Half the sum of all entries of the eccentricity matrix, exactly."""
    return Fraction(int(eccentricity_matrix(g).sum()), 2)


def is_epsilon_regular(g: Graph) -> bool:
    rows = eccentricity_matrix(g).sum(axis=1)
    return bool(np.all(rows == rows[0]))


class RadiusBound(NamedTuple):
    rho: float
    bound: float
    equality: bool


def check_radius_bound(g: Graph, slack: float = 1e-9, eq_tol: float = 1e-6) -> RadiusBound:
    """Compare the eccentricity spectral radius with ``2 W / n``.

    Raises ``AssertionError`` if the lower bound is violated by more than ``slack``.
    """
    eps = eccentricity_matrix(g)
    rho = sym_eigenvalues(eps)[0]
    bound = float(eps.sum()) / g.n
    if rho < bound - slack:
        raise AssertionError(f"spectral radius {rho!r} below 2W/n = {bound!r}")
    return RadiusBound(rho, bound, abs(rho - bound) < eq_tol)
