from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eccx import _backend
from eccx.errors import ContractError, PartitionError
from eccx.graph import disjoint_union, family, join
from eccx.linalg import (
    Partition,
    char_poly,
    durand_kerner,
    energy,
    group,
    is_integral,
    quotient,
    small_eigenvalues,
    spectra_equal,
    squarefree_factors,
    sym_eigenvalues,
)
from eccx.metrics import eccentricity_matrix

BACKENDS = ["python"] + (["cython"] if _backend.compiled is not None else [])

symmetric = st.integers(1, 9).flatmap(
    lambda n: st.lists(st.integers(-5, 5), min_size=n * n, max_size=n * n).map(
        lambda xs: (lambda a: a + a.T)(np.array(xs, dtype=float).reshape(n, n))))


@pytest.mark.parametrize("backend", BACKENDS)
def test_known_spectra(backend):
    p3 = np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]], dtype=float)
    vals = sym_eigenvalues(p3, backend=backend)
    assert vals == sorted(vals, reverse=True)
    assert np.allclose(vals, np.sort(np.linalg.eigvalsh(p3))[::-1], atol=1e-10)
    k4 = np.ones((4, 4)) - np.eye(4)
    assert np.allclose(sym_eigenvalues(k4, backend=backend), [3, -1, -1, -1], atol=1e-12)
    assert sym_eigenvalues(np.zeros((3, 3)), backend=backend) == [0.0, 0.0, 0.0]


def test_rejects_non_symmetric():
    with pytest.raises(ContractError):
        sym_eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(ContractError):
        sym_eigenvalues([[0, 1, 2]])


@settings(max_examples=60, deadline=None)
@given(symmetric)
def test_backends_agree(a):
    ref = np.sort(np.linalg.eigvalsh(a))[::-1]
    for b in BACKENDS:
        assert np.max(np.abs(np.array(sym_eigenvalues(a, backend=b)) - ref)) < 1e-8 * max(1.0, np.abs(a).max())


@settings(max_examples=60, deadline=None)
@given(symmetric.filter(lambda a: a.shape[0] <= 6))
def test_charpoly_route_matches_jacobi(a):
    # scale to keep coefficients moderate; the agreement tolerance is absolute
    jac = sym_eigenvalues(a)
    dk = small_eigenvalues(a)
    assert len(dk) == len(jac)
    assert max(abs(x - y) for x, y in zip(jac, dk)) < 1e-7


@settings(max_examples=40, deadline=None)
@given(symmetric)
def test_trace_equals_eigenvalue_sum(a):
    assert abs(sum(sym_eigenvalues(a)) - np.trace(a)) < 1e-8 * max(1.0, np.abs(a).sum())


def test_char_poly_exact():
    k3 = np.ones((3, 3)) - np.eye(3)
    # (x - 2)(x + 1)^2 = x^3 - 3x - 2
    assert char_poly(k3) == [1, 0, -3, -2]
    factors = squarefree_factors(char_poly(k3))
    assert [(list(f), k) for f, k in factors] == [([1, -2], 1), ([1, 1], 2)]


def test_durand_kerner_roots():
    roots = sorted(durand_kerner([1, -6, 11, -6]), key=lambda z: z.real)
    assert np.allclose([z.real for z in roots], [1, 2, 3], atol=1e-12)
    cplx = durand_kerner([1, 0, 1])
    assert sorted(round(z.imag, 12) for z in cplx) == [-1, 1]


def test_small_eigenvalues_repeated_and_non_real():
    assert small_eigenvalues(np.ones((4, 4)) - np.eye(4)) == [3.0, -1.0, -1.0, -1.0]
    with pytest.raises(ContractError):
        small_eigenvalues([[0, -1], [1, 0]])
    with pytest.raises(ContractError):
        small_eigenvalues(np.eye(9))


def test_grouping_and_comparison():
    s = group([1.0, 1.0 + 4e-7, -2.0, 3.0])
    assert s.pairs[0] == (3.0, 1) and s.pairs[2] == (-2.0, 1)
    assert s.multiplicity(1.0) == 2 and s.order == 4
    assert energy(s) == pytest.approx(3 + 2 + 4e-7 + 2)
    assert spectra_equal(group([1, 2]), group([1 + 5e-7, 2]))
    assert not spectra_equal(group([1, 2]), group([1, 2, 3]))
    assert is_integral(group([2.0000001, -3]))
    assert not is_integral(group([math.sqrt(2)]))
    assert s.to_json()[0] == {"value": 3.0, "multiplicity": 1}


def _join_union_complete(n, m, l):
    g = join(family("complete", [n]), disjoint_union([family("complete", [m]), family("complete", [l])]))
    return eccentricity_matrix(g).astype(float), Partition.from_sizes([n, m, l])


@pytest.mark.parametrize("n,m,l", [(2, 3, 4), (1, 2, 2), (3, 1, 5)])
def test_quotient_eigenvalues_are_contained(n, m, l):
    eps, part = _join_union_complete(n, m, l)
    q = quotient(eps, part)
    assert np.array_equal(q, [[n - 1, m, l], [n, 0, 2 * l], [n, 2 * m, 0]])
    full = sym_eigenvalues(eps)
    for mu in small_eigenvalues(q):
        assert min(abs(mu - x) for x in full) < 1e-6


def test_quotient_rejects_non_equitable():
    eps = eccentricity_matrix(family("path", [4])).astype(float)
    with pytest.raises(PartitionError, match="block pair"):
        quotient(eps, Partition.from_sizes([2, 2]))
    with pytest.raises(PartitionError):
        quotient(eps, Partition([[0, 1], [1, 2, 3]]))
    with pytest.raises(PartitionError):
        quotient(eps, Partition([[0, 1], [2]]))
