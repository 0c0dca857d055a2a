from __future__ import annotations

import numpy as np
import pytest

from eccx.errors import ParameterError, StructureError
from eccx.graph import (
    Graph,
    complement,
    components,
    disjoint_union,
    family,
    incidence_matrix,
    is_connected,
    join,
    line_graph,
    regularity,
    subdivision,
    subdivision_edge_join,
    subdivision_vertex_join,
)


def test_rejects_bad_adjacency():
    for bad in ([[0, 1], [0, 0]], [[1, 0], [0, 0]], [[0, 2], [2, 0]], [[0, 1, 0]], np.zeros((0, 0))):
        with pytest.raises(Exception):
            Graph(bad)


def test_edges_are_lexicographic():
    g = Graph.from_edges(4, [(3, 2), (0, 3), (1, 0)])
    assert g.edges() == [(0, 1), (0, 3), (2, 3)]
    assert g.num_edges == 3


@pytest.mark.parametrize("name,params,n,q,r", [
    ("complete", [4], 4, 6, 3),
    ("complete_bipartite", [3, 3], 6, 9, 3),
    ("cycle", [5], 5, 5, 2),
    ("path", [3], 3, 2, None),
    ("star", [5], 5, 4, None),
    ("petersen", [], 10, 15, 3),
    ("prism", [], 6, 9, 3),
])
def test_families(name, params, n, q, r):
    g = family(name, params)
    assert (g.n, g.num_edges, regularity(g)) == (n, q, r)
    assert is_connected(g)


def test_family_errors():
    for name, params in [("cycle", [2]), ("complete", [0]), ("path", []), ("nope", [3]), ("star", [1])]:
        with pytest.raises(ParameterError):
            family(name, params)


def test_petersen_has_girth_five():
    a = family("petersen").adjacency.astype(int)
    a2 = a @ a
    assert np.trace(a @ a2) == 0  # no triangles
    off = a2 - np.diag(np.diag(a2))
    assert off[a == 1].max() == 0 and off.max() == 1  # no 4-cycles


def test_complement_and_join():
    c5 = family("cycle", [5])
    co = complement(c5)
    assert regularity(co) == 2 and is_connected(co) and co != c5  # isomorphic, relabelled
    j = join(family("complete", [2]), family("complete", [3]))
    assert j == family("complete", [5])


def test_disjoint_union_components():
    u = disjoint_union([family("complete", [2]), family("complete", [2])])
    assert not is_connected(u)
    assert len(components(u)) == 2
    assert is_connected(Graph([[0]]))


def test_incidence_identities_regular():
    for g in (family("petersen"), family("cycle", [6]), family("complete", [5])):
        r = regularity(g)
        inc = incidence_matrix(g)
        a = g.adjacency.astype(np.int64)
        b = line_graph(g).adjacency.astype(np.int64)
        assert np.array_equal(inc @ inc.T, a + r * np.eye(g.n, dtype=np.int64))
        assert np.array_equal(inc.T @ inc, b + 2 * np.eye(g.num_edges, dtype=np.int64))
        assert np.array_equal(inc.sum(axis=0), np.full(g.num_edges, 2))
        assert np.array_equal(inc.sum(axis=1), np.full(g.n, r))


def test_line_graph_counts():
    k4 = family("complete", [4])
    lg = line_graph(k4)
    assert lg.n == 6 and regularity(lg) == 4
    l2 = line_graph(line_graph(family("prism")))
    assert l2.n == 18 and regularity(l2) == 6
    with pytest.raises(StructureError):
        line_graph(Graph([[0]]))


def test_subdivision_and_joins():
    c3 = family("cycle", [3])
    s = subdivision(c3)
    assert s == family("cycle", [6]) or (s.n == 6 and regularity(s) == 2 and is_connected(s))
    k1 = family("complete", [1])
    svj = subdivision_vertex_join(c3, k1)
    assert (svj.n, svj.num_edges) == (7, 9)
    sej = subdivision_edge_join(c3, k1)
    assert (sej.n, sej.num_edges) == (7, 9)
    # the apex sees the original vertices in one join and the subdivision vertices in the other
    assert svj.neighbors(6) == [0, 1, 2]
    assert sej.neighbors(6) == [3, 4, 5]
    star = subdivision_edge_join(family("complete", [2]), k1)
    assert sorted(star.degrees().tolist()) == [1, 1, 1, 3]
    with pytest.raises(StructureError):
        subdivision_vertex_join(Graph([[0]]), k1)


def test_large_composite_sizes():
    g = subdivision_edge_join(family("complete", [11]), family("complete", [45]))
    assert g.n == 111


def test_equality_ignores_label():
    a = family("cycle", [4])
    assert a == a.with_label("other") and hash(a) == hash(a.with_label(None))
