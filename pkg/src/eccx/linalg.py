"""Eigenvalues, spectra and equitable quotients.

Two independent eigenvalue routes are provided on purpose: ``sym_eigenvalues``
(cyclic Jacobi, compiled or numpy kernel) for symmetric matrices of any order,
and ``small_eigenvalues`` (exact characteristic polynomial + Durand-Kerner)
for the small, generally non-symmetric quotient matrices.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _backend
from .errors import ContractError, NumericError, PartitionError

GROUP_TOL = 1e-6
COMPARE_TOL = 1e-6
INTEGRAL_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as ``(value, multiplicity)`` pairs, values descending."""

    pairs: tuple[tuple[float, int], ...]
    tol: float = GROUP_TOL

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list[float]:
        """Expanded, descending list of eigenvalues (each representative repeated)."""
        return [v for v, m in self.pairs for _ in range(m)]

    @property
    def largest(self) -> float:
        return self.pairs[0][0]

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(m for v, m in self.pairs if abs(v - value) <= tol)

    def to_json(self) -> list[dict]:
        # 12 significant digits; roundoff-level values print as 0
        return [{"value": float(f"{v:.12g}") + 0.0 if abs(v) >= 1e-9 else 0.0, "multiplicity": m}
                for v, m in self.pairs]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class Partition:
    """Ordered blocks of indices covering ``0..order-1``."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "blocks", tuple(tuple(int(i) for i in b) for b in blocks))

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> Partition:
        """Consecutive blocks of the given sizes."""
        edges = np.cumsum([0, *sizes])
        return cls(range(a, b) for a, b in zip(edges[:-1], edges[1:]))

    def validate(self, order: int) -> None:
        seen: set[int] = set()
        for k, b in enumerate(self.blocks):
            if not b:
                raise PartitionError(f"block {k} is empty")
            for i in b:
                if not 0 <= i < order:
                    raise PartitionError(f"index {i} in block {k} is outside 0..{order - 1}")
                if i in seen:
                    raise PartitionError(f"index {i} appears in more than one block")
                seen.add(i)
        if len(seen) != order:
            missing = sorted(set(range(order)) - seen)
            raise PartitionError(f"blocks do not cover indices {missing[:5]}")


def _as_square(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError(f"expected a square matrix, got shape {a.shape}")
    return a


# ---------------------------------------------------------------------------
# symmetric route


def sym_eigenvalues(m, backend: str | None = None, rel_tol: float = 1e-11, max_sweeps: int = 60) -> list[float]:
    """Eigenvalues of a real symmetric matrix, descending, by cyclic Jacobi rotations."""
    a = _as_square(m)
    if a.shape[0] == 0:
        return []
    if not np.all(np.abs(a - a.T) <= 1e-12 * max(1.0, float(np.max(np.abs(a))))):
        raise ContractError("sym_eigenvalues needs a symmetric matrix")
    eig, sweeps, converged = _backend.kernels(backend).jacobi_eigenvalues(a, rel_tol, max_sweeps)
    if not converged:
        raise NumericError(f"Jacobi iteration did not converge in {sweeps} sweeps")
    return sorted(eig.tolist(), reverse=True)


# ---------------------------------------------------------------------------
# characteristic-polynomial route

Poly = list[Fraction]  # coefficients, highest degree first


def char_poly(m) -> Poly:
    """Exact characteristic polynomial ``det(xI - m)`` (monic) by Faddeev-LeVerrier.

    Float entries are converted to fractions exactly, so integer matrices give
    integer coefficients.
    """
    a = _as_square(m)
    n = a.shape[0]
    mat = [[Fraction(float(x)) for x in row] for row in a]
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        prev = coeffs[-1]
        am = [[sum(mat[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += prev
        mk = am
        tr = sum(sum(mat[i][t] * mk[t][i] for t in range(n)) for i in range(n))
        coeffs.append(-tr / k)
    return coeffs


def _trim(p: Poly) -> Poly:
    k = 0
    while k < len(p) - 1 and p[k] == 0:
        k += 1
    return p[k:]


def _deriv(p: Poly) -> Poly:
    d = len(p) - 1
    return _trim([c * (d - k) for k, c in enumerate(p[:-1])]) or [Fraction(0)]


def _divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    num = list(num)
    if len(num) < len(den):
        return [Fraction(0)], num
    quot = []
    for k in range(len(num) - len(den) + 1):
        c = num[k] / den[0]
        quot.append(c)
        for t in range(len(den)):
            num[k + t] -= c * den[t]
    rem = _trim(num[len(quot):]) if len(num) > len(quot) else [Fraction(0)]
    return quot, rem


def _monic(p: Poly) -> Poly:
    return [c / p[0] for c in p]


def _gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while not (len(b) == 1 and b[0] == 0):
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a)


def squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's square-free decomposition over the rationals: ``p = prod f_i ** i``."""
    p = _monic(_trim(p))
    if len(p) == 1:
        return []
    out = []
    a0 = _gcd(p, _deriv(p))
    b = _divmod(p, a0)[0]
    c = _divmod(_deriv(p), a0)[0]
    d = _sub(c, _deriv(b))
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        b = _divmod(b, a)[0]
        c = _divmod(d, a)[0]
        d = _sub(c, _deriv(b))
        if len(a) > 1:
            out.append((a, i))
        i += 1
    return out


def _sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    a = [Fraction(0)] * (n - len(a)) + list(a)
    b = [Fraction(0)] * (n - len(b)) + list(b)
    return _trim([x - y for x, y in zip(a, b)])


def durand_kerner(coeffs: Sequence[complex], max_iter: int = 500, tol: float = 1e-12) -> list[complex]:
    """All roots of a polynomial by simultaneous (Weierstrass) iteration.

    Starting points are the ``d``-th roots of unity, rotated off the real axis
    and scaled by ``1 + max|coefficient|`` of the monic polynomial.  Convergence
    is judged by the relative backward residual ``|p(z)| / sum |c_k||z|^k``.
    """
    c = [complex(x) for x in coeffs]
    c = [x / c[0] for x in c]
    d = len(c) - 1
    if d == 0:
        return []
    if d == 1:
        return [-c[1]]
    radius = 1.0 + max(abs(x) for x in c[1:])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / d + math.pi / (2 * d))) for k in range(d)]

    def residual(x: complex) -> float:
        val, scale = 0j, 0.0
        for ck in c:
            val = val * x + ck
            scale = scale * abs(x) + abs(ck)
        return abs(val) / scale if scale else 0.0

    for _ in range(max_iter):
        new = []
        for k, zk in enumerate(z):
            num = 0j
            for ck in c:
                num = num * zk + ck
            den = 1 + 0j
            for j, zj in enumerate(z):
                if j != k:
                    den *= zk - zj
            new.append(zk - num / den if den != 0 else zk + 1e-9)
        step = max(abs(a - b) for a, b in zip(new, z))
        z = new
        if step <= 1e-14 * radius:
            worst = max(residual(x) for x in z)
            if worst < tol:
                break
    worst = max(residual(x) for x in z)
    if worst >= tol:
        raise NumericError(f"Durand-Kerner residual {worst:.3g} above {tol:g} after {max_iter} iterations")
    return z


def small_eigenvalues(m, max_order: int = 8, imag_tol: float = 1e-7) -> list[float]:
    """Real eigenvalues of a small (possibly non-symmetric) matrix, descending.

    Repeated eigenvalues are split off exactly (square-free decomposition of
    the rational characteristic polynomial) so each factor has simple roots.
    A root with imaginary part above ``imag_tol`` raises :class:`ContractError`;
    for a quotient matrix that means the partition was not equitable.
    """
    a = _as_square(m)
    if a.shape[0] > max_order:
        raise ContractError(f"small_eigenvalues handles order <= {max_order}, got {a.shape[0]}")
    if a.shape[0] == 0:
        return []
    out: list[float] = []
    for factor, mult in squarefree_factors(char_poly(a)):
        for z in durand_kerner([float(x) for x in factor]):
            if abs(z.imag) > imag_tol:
                raise ContractError(f"eigenvalue {z:.6g} is not real")
            out.extend([z.real + 0.0] * mult)
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# spectra


def group(values: Iterable[float], tol: float = GROUP_TOL) -> Spectrum:
    """Single-linkage grouping of sorted values; each group is represented by its mean."""
    if tol <= 0:
        raise ContractError("grouping tolerance must be positive")
    vals = sorted((float(v) for v in values), reverse=True)
    pairs: list[tuple[float, int]] = []
    run: list[float] = []
    for v in vals:
        if run and run[-1] - v > tol:
            pairs.append((math.fsum(run) / len(run), len(run)))
            run = []
        run.append(v)
    if run:
        pairs.append((math.fsum(run) / len(run), len(run)))
    return Spectrum(tuple(pairs), tol)


def spectrum(m, tol: float = GROUP_TOL, backend: str | None = None) -> Spectrum:
    """Grouped spectrum of a symmetric matrix."""
    return group(sym_eigenvalues(m, backend=backend), tol)


def energy(s: Spectrum) -> float:
    return math.fsum(m * abs(v) for v, m in s.pairs)


def max_deviation(a: Spectrum, b: Spectrum) -> float:
    """Largest gap between the sorted expanded spectra (``inf`` if orders differ)."""
    va, vb = a.values(), b.values()
    if len(va) != len(vb):
        return math.inf
    return max((abs(x - y) for x, y in zip(va, vb)), default=0.0)


def spectra_equal(a: Spectrum, b: Spectrum, tol: float = COMPARE_TOL) -> bool:
    return max_deviation(a, b) <= tol


def is_integral(s: Spectrum, tol: float = INTEGRAL_TOL) -> bool:
    return all(abs(v - round(v)) <= tol for v, _ in s.pairs)


def quotient(m, partition: Partition, tol: float = 1e-9) -> np.ndarray:
    """Equitable quotient matrix: entry ``(X, Y)`` is the common row sum of block ``X`` over columns ``Y``."""
    a = _as_square(m)
    partition.validate(a.shape[0])
    k = len(partition.blocks)
    f = np.zeros((k, k))
    for x, rows in enumerate(partition.blocks):
        for y, cols in enumerate(partition.blocks):
            sums = a[np.ix_(rows, cols)].sum(axis=1)
            bad = np.flatnonzero(np.abs(sums - sums[0]) > tol)
            if bad.size:
                row = rows[int(bad[0])]
                raise PartitionError(
                    f"not equitable: block pair ({x}, {y}), row {row} sums to {sums[bad[0]]:g}, "
                    f"row {rows[0]} to {sums[0]:g}"
                )
            f[x, y] = sums[0]
    return f
