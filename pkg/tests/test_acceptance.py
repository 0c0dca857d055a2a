"""Acceptance criteria 1-8.

Each test records one ``criterion k: PASS|FAIL`` line, printed in the pytest
terminal summary.  Running this file directly prints the same lines.
"""

from __future__ import annotations

import itertools
import math
import time

import numpy as np
import pytest

from _corpus import all_graphs, left_corpus, right_corpus, theorem_jobs, trees
from eccx.constructions import (
    energy_6t1,
    energy_12t,
    equienergetic_pair_6t1,
    equienergetic_pair_12t,
    integral_family_scan,
)
from eccx.errors import HypothesisError
from eccx.formats import parse_graph6, serialize_graph6
from eccx.graph import (
    Graph,
    disjoint_union,
    family,
    incidence_matrix,
    is_connected,
    join,
    line_graph,
    regularity,
    subdivision_edge_join,
    subdivision_vertex_join,
)
from eccx.linalg import group, small_eigenvalues, spectra_equal, sym_eigenvalues
from eccx.metrics import (
    check_radius_bound,
    eccentricity_matrix,
    epsilon_spectrum,
    epsilon_wiener,
    is_epsilon_irreducible,
    is_epsilon_regular,
    is_self_centered,
)
from eccx.theorems import (
    regular_data,
    se_join_quotient,
    sv_join_quotient,
    verify,
    wiener_se_join,
    wiener_sv_join,
)

RESULTS: dict[int, str] = {}


def _record(k: int, checks: list[tuple[str, bool]], elapsed: float, summary: str = "") -> list[str]:
    failed = [name for name, ok in checks if not ok]
    status = "FAIL" if failed else "PASS"
    detail = f"failed: {', '.join(failed)}" if failed else summary or f"{len(checks)} checks"
    RESULTS[k] = f"criterion {k}: {status} ({detail}; {elapsed:.2f} s)"
    return failed


def _expand(spec: dict[int, int]) -> list[float]:
    return [float(v) for v, m in spec.items() for _ in range(m)]


def _l2(g: Graph) -> Graph:
    return line_graph(line_graph(g))


def test_criterion_1_self_join_pair():
    t0 = time.perf_counter()
    expected = {
        "prism": {22: 2, -10: 2, -8: 4, -4: 4, -2: 6, 2: 18},
        "K3,3": {22: 2, -8: 8, -2: 8, 2: 18},
    }
    checks = []
    spectra = {}
    for name, g in (("prism", family("prism")), ("K3,3", family("complete_bipartite", [3, 3]))):
        h = _l2(g)
        composite = join(h, h)
        spec = epsilon_spectrum(composite)
        spectra[name] = spec
        want = group(_expand(expected[name]))
        checks.append((f"{name} order 36", composite.n == 36))
        checks.append((f"{name} spectrum", spectra_equal(spec, want, 1e-6)))
        checks.append((f"{name} integral values", all(abs(v - round(v)) < 1e-6 for v in spec.values())))
        energy = sum(abs(v) for v in spec.values())
        checks.append((f"{name} energy 160", abs(energy - 160) < 1e-6))
    checks.append(("pair not cospectral", not spectra_equal(spectra["prism"], spectra["K3,3"])))
    report = equienergetic_pair_12t(3)
    built = report.spectra
    checks.append(("constructed pair matches", any(
        spectra_equal(built[0], spectra[a]) and spectra_equal(built[1], spectra[b])
        for a, b in (("prism", "K3,3"), ("K3,3", "prism")))))
    elapsed = time.perf_counter() - t0
    checks.append(("runtime < 2 s", elapsed < 2))
    assert not _record(1, checks, elapsed)


def test_criterion_2_apex_pair():
    t0 = time.perf_counter()
    closed = 58 + 2 * math.sqrt(139)
    checks = []
    for name, g in (("prism", family("prism")), ("K3,3", family("complete_bipartite", [3, 3]))):
        composite = join(_l2(g), family("complete", [1]))
        spec = epsilon_spectrum(composite)
        energy = sum(abs(v) for v in spec.values())
        checks.append((f"{name} order 19", composite.n == 19))
        checks.append((f"{name} energy closed form (1e-9)", abs(energy - closed) < 1e-9))
        for root in (11 + math.sqrt(139), 11 - math.sqrt(139)):
            checks.append((f"{name} has {root:.6f}", spec.multiplicity(root, 1e-6) >= 1))
    report = equienergetic_pair_6t1(3)
    checks.append(("constructed pair equienergetic", report.equienergetic and report.non_cospectral))
    elapsed = time.perf_counter() - t0
    checks.append(("runtime < 1 s", elapsed < 1))
    attainable = list(checks)
    # 58 + 2 sqrt(139) = 81.57965...; the quoted 81.579 is truncated, so |delta| = 6.5e-4
    quoted_ok = abs(closed - 81.579) < 5e-4
    checks.append(("within 5e-4 of quoted 81.579", quoted_ok))
    _record(2, checks, elapsed)
    assert all(ok for _, ok in attainable)
    if not quoted_ok:
        pytest.xfail(f"quoted 81.579 is truncated; exact value {closed:.6f} differs by {abs(closed - 81.579):.2e}")


def test_criterion_3_energy_closed_forms():
    t0 = time.perf_counter()
    checks = []
    for t in (3, 4, 5):
        r12 = equienergetic_pair_12t(t)
        r61 = equienergetic_pair_6t1(t)
        checks.append((f"12t t={t}", all(abs(e - energy_12t(t)) < 1e-6 for e in r12.energies)))
        checks.append((f"6t+1 t={t}", all(abs(e - energy_6t1(t)) < 1e-6 for e in r61.energies)))
        checks.append((f"non-cospectral t={t}", r12.non_cospectral and r61.non_cospectral))
    elapsed = time.perf_counter() - t0
    checks.append(("runtime < 60 s", elapsed < 60))
    assert not _record(3, checks, elapsed)


def test_criterion_4_oracle_suite():
    t0 = time.perf_counter()
    passed = failed = skipped = 0
    bad = []
    for tid, graphs in theorem_jobs():
        try:
            rep = verify(tid, graphs, tol=1e-6)
        except HypothesisError:
            # only complete operands fall outside these hypotheses
            assert tid in ("join-k1", "self-join", "join-union")
            assert regularity(graphs[0]) == graphs[0].n - 1
            skipped += 1
            continue
        if rep.passed:
            passed += 1
        else:
            failed += 1
            bad.append(f"{tid}{rep.operands}")
    elapsed = time.perf_counter() - t0
    checks = [
        (f"{passed} admissible tuples pass", passed > 0 and failed == 0),
        *[(b, False) for b in bad[:5]],
        ("runtime < 30 s", elapsed < 30),
    ]
    summary = f"{passed} passed, {failed} failed, {skipped} outside hypotheses"
    assert not _record(4, checks, elapsed, summary), bad


def test_criterion_5_wiener_and_radius_bound():
    t0 = time.perf_counter()
    checks = []
    for g1 in left_corpus():
        d1 = regular_data(g1)
        for g2 in right_corpus():
            args = (d1.p, d1.q, d1.r, g2.n, regularity(g2))
            checks.append((f"W sv {g1.label},{g2.label}",
                           wiener_sv_join(*args) == epsilon_wiener(subdivision_vertex_join(g1, g2))))
            checks.append((f"W se {g1.label},{g2.label}",
                           wiener_se_join(*args) == epsilon_wiener(subdivision_edge_join(g1, g2))))
    graphs = left_corpus() + right_corpus()
    for g1 in left_corpus():
        for g2 in right_corpus():
            graphs += [subdivision_vertex_join(g1, g2), subdivision_edge_join(g1, g2)]
    for g in graphs:
        try:
            res = check_radius_bound(g, slack=1e-9, eq_tol=1e-6)
        except AssertionError:
            checks.append((f"bound {g.label}", False))
            continue
        checks.append((f"equality iff regular {g.label}", res.equality == is_epsilon_regular(g)))
    elapsed = time.perf_counter() - t0
    assert not _record(5, checks, elapsed)


def test_criterion_6_irreducibility():
    t0 = time.perf_counter()
    checks = []
    for m, n in itertools.product(range(2, 6), repeat=2):
        checks.append((f"K{m},{n} reducible", not is_epsilon_irreducible(family("complete_bipartite", [m, n]))))
    for n in range(1, 10):
        for edges in trees(n):
            t = Graph.from_edges(n, edges)
            checks.append((f"tree {serialize_graph6(t)}", is_epsilon_irreducible(t)))
    unions = [disjoint_union([a, b]) for a, b in itertools.combinations_with_replacement(right_corpus(), 2)]
    for g1 in left_corpus() + [family("path", [4]), family("star", [4]), family("complete", [2])]:
        for g2 in right_corpus() + unions:
            checks.append((f"se {g1.label},{g2.label}", is_epsilon_irreducible(subdivision_edge_join(g1, g2))))
            if g1.n == 2:
                continue
            checks.append((f"sv {g1.label},{g2.label}", is_epsilon_irreducible(subdivision_vertex_join(g1, g2))))
    k2k2 = disjoint_union([family("complete", [2]), family("complete", [2])])
    c5, star, p4 = family("cycle", [5]), family("star", [4]), family("path", [4])
    checks.append(("C5 self-centered diam 2", is_self_centered(c5)))
    checks.append(("C5 v 2K2 reducible", not is_epsilon_irreducible(join(c5, k2k2))))
    checks.append(("K1,3 not self-centered", not is_self_centered(star)))
    checks.append(("K1,3 v 2K2 irreducible", is_epsilon_irreducible(join(star, k2k2))))
    checks.append(("P4 v 2K2 reducible", not is_epsilon_irreducible(join(p4, k2k2))))
    elapsed = time.perf_counter() - t0
    assert not _record(6, checks, elapsed)


def test_criterion_7_integral_scans():
    t0 = time.perf_counter()
    k3 = integral_family_scan("k3_svjoin_kn", 2, 130)
    k11 = integral_family_scan("k11_sejoin_kn", 2, 50)
    elapsed = time.perf_counter() - t0
    checks = [
        ("K3 hits", [r.params[0] for r in k3 if r.is_integral] == [6, 18, 36, 60, 90, 126]),
        ("K3 predicate agrees", all(r.agree for r in k3)),
        ("K11 hits", [r.params[0] for r in k11 if r.is_integral] == [45]),
        ("K11 predicate agrees", all(r.agree for r in k11)),
        ("runtime < 120 s", elapsed < 120),
    ]
    assert not _record(7, checks, elapsed)


def test_criterion_8_properties():
    t0 = time.perf_counter()
    checks = []
    graphs = left_corpus() + right_corpus()
    for g1 in left_corpus():
        for g2 in right_corpus():
            graphs += [subdivision_vertex_join(g1, g2), subdivision_edge_join(g1, g2)]
    trace_ok = all(abs(sum(sym_eigenvalues(eccentricity_matrix(g)))) < 1e-8 * g.n for g in graphs)
    checks.append(("trace zero", trace_ok))

    contained = True
    for g1 in left_corpus():
        for g2 in right_corpus():
            d1, d2 = regular_data(g1), regular_data(g2)
            for qfun, op in ((sv_join_quotient, subdivision_vertex_join), (se_join_quotient, subdivision_edge_join)):
                full = sym_eigenvalues(eccentricity_matrix(op(g1, g2)))
                for mu in small_eigenvalues(qfun(d1, d2)):
                    contained &= min(abs(mu - x) for x in full) < 1e-6
    checks.append(("quotient containment", contained))

    identities = True
    for g in left_corpus() + right_corpus()[1:]:
        r, inc = regularity(g), incidence_matrix(g)
        a = g.adjacency.astype(np.int64)
        b = line_graph(g).adjacency.astype(np.int64)
        j_p, j_q = np.ones((g.n, g.n), dtype=np.int64), np.ones((g.num_edges, g.num_edges), dtype=np.int64)
        identities &= np.array_equal(inc @ inc.T, a + r * np.eye(g.n, dtype=np.int64))
        identities &= np.array_equal(inc.T @ inc, b + 2 * np.eye(g.num_edges, dtype=np.int64))
        identities &= np.array_equal(j_p @ inc, 2 * np.ones_like(inc)) and np.array_equal(inc.T @ j_p, 2 * np.ones_like(inc.T))
        identities &= np.array_equal(j_q @ inc.T, r * np.ones_like(inc.T)) and np.array_equal(inc @ j_q, r * np.ones_like(inc))
    checks.append(("incidence identities", identities))

    agree = True
    small = [g for g in left_corpus() + right_corpus() if g.n <= 6]
    for n in range(1, 6):
        small += [g for g in (Graph.from_edges(n, e) for e in all_graphs(n)) if is_connected(g)]
    for g in small:
        eps = eccentricity_matrix(g)
        jac, dk = sym_eigenvalues(eps), small_eigenvalues(eps)
        agree &= len(jac) == len(dk) and max(abs(x - y) for x, y in zip(jac, dk)) < 1e-7
    checks.append((f"Jacobi vs char-poly on {len(small)} graphs", agree))

    round_trip = all(
        parse_graph6(serialize_graph6(Graph.from_edges(n, e))) == Graph.from_edges(n, e)
        for n in range(1, 6) for e in all_graphs(n)
    )
    checks.append(("graph6 round-trip n <= 5", round_trip))
    elapsed = time.perf_counter() - t0
    assert not _record(8, checks, elapsed)


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for fn in tests:
        try:
            fn()
        except (AssertionError, pytest.fail.Exception, pytest.xfail.Exception):
            pass
    for k in sorted(RESULTS):
        print(RESULTS[k])
    sys.exit(0 if all(": PASS" in line for line in RESULTS.values()) else 1)
