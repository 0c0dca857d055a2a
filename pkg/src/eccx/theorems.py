"""Closed-form eccentricity spectra of join-type operations on regular graphs.

Every predictor works from :class:`RegularGraphData` (order, size, degree and
adjacency spectrum) rather than from a graph, so a prediction depends on an
operand only through those numbers.  ``verify`` builds the actual graph and
compares the prediction with the numerically computed spectrum.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ContractError, HypothesisError
from .graph import (
    Graph,
    disjoint_union,
    join,
    regularity,
    subdivision_edge_join,
    subdivision_vertex_join,
)
from .linalg import (
    COMPARE_TOL,
    GROUP_TOL,
    Spectrum,
    group,
    is_integral,
    max_deviation,
    small_eigenvalues,
    sym_eigenvalues,
)
from .metrics import eccentricity_matrix


@dataclass(frozen=True)
class RegularGraphData:
    """Parameters of an ``r``-regular graph with ``p`` vertices and ``q`` edges."""

    p: int
    q: int
    r: int
    a_spectrum: Spectrum
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if 2 * self.q != self.p * self.r:
            raise ContractError(f"2q = {2 * self.q} but p*r = {self.p * self.r}")
        if self.a_spectrum.order != self.p:
            raise ContractError(f"spectrum has {self.a_spectrum.order} values, expected {self.p}")
        if abs(self.a_spectrum.largest - self.r) > 1e-6:
            raise ContractError(f"largest eigenvalue {self.a_spectrum.largest} differs from r = {self.r}")

    @classmethod
    def from_values(cls, p: int, r: int, values: Sequence[float], label: str | None = None) -> RegularGraphData:
        return cls(p, p * r // 2, r, group(values), label)

    @property
    def complete(self) -> bool:
        return self.r == self.p - 1

    def others(self) -> list[float]:
        """Adjacency eigenvalues with one copy of ``r`` removed."""
        return self.a_spectrum.values()[1:]


def regular_data(g: Graph) -> RegularGraphData:
    r = regularity(g)
    if r is None:
        raise HypothesisError(f"{g.label or 'graph'} is not regular")
    return RegularGraphData(g.n, g.num_edges, r, group(sym_eigenvalues(g.adjacency)), g.label)


# ---------------------------------------------------------------------------
# spectra of derived regular graphs


def line_spectrum(d: RegularGraphData) -> Spectrum:
    if d.r < 1:
        raise ContractError("line graph spectrum needs r >= 1")
    if d.q < d.p:
        raise ContractError(f"line graph spectrum formula needs q >= p (q={d.q}, p={d.p})")
    vals = [2.0 * d.r - 2] + [lam + d.r - 2 for lam in d.others()] + [-2.0] * (d.q - d.p)
    return group(vals)


def l2_spectrum(d: RegularGraphData) -> Spectrum:
    """Spectrum of the second iterated line graph (``r >= 3``)."""
    if d.r < 3:
        raise ContractError(f"second line graph formula needs r >= 3, got {d.r}")
    vals = [4.0 * d.r - 6] + [lam + 3 * d.r - 6 for lam in d.others()]
    vals += [2.0 * d.r - 6] * (d.p * (d.r - 2) // 2)
    vals += [-2.0] * (d.p * d.r * (d.r - 2) // 2)
    return group(vals)


def complement_spectrum(d: RegularGraphData) -> Spectrum:
    return group([d.p - d.r - 1.0] + [-(lam + 1) for lam in d.others()])


def line_data(d: RegularGraphData) -> RegularGraphData:
    return RegularGraphData(d.q, d.q * (d.r - 1), 2 * d.r - 2, line_spectrum(d), f"L({d.label})")


def l2_data(d: RegularGraphData) -> RegularGraphData:
    p = d.q * (d.r - 1)
    r = 4 * d.r - 6
    return RegularGraphData(p, p * r // 2, r, l2_spectrum(d), f"L2({d.label})")


def complement_data(d: RegularGraphData) -> RegularGraphData:
    r = d.p - d.r - 1
    return RegularGraphData(d.p, d.p * r // 2, r, complement_spectrum(d), f"co({d.label})")


# ---------------------------------------------------------------------------
# helpers


def quadratic_roots(a: float, b: float, c: float) -> tuple[float, float]:
    """Real roots of ``a x^2 + b x + c`` without cancellation."""
    disc = b * b - 4 * a * c
    if disc < 0:
        if disc > -1e-12 * max(1.0, b * b):
            disc = 0.0
        else:
            raise ContractError(f"complex roots (discriminant {disc})")
    qq = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if qq == 0.0:
        return 0.0, 0.0
    return qq / a, c / qq


def _sv_pair(s: float) -> list[float]:
    # mu t = -3s and mu = -3t + 4 - 4s  =>  3t^2 + 4(s-1)t - 3s = 0
    return [-3 * t + 4 - 4 * s for t in quadratic_roots(3.0, 4.0 * (s - 1), -3.0 * s)]


def _se_pair(lam: float, r: int) -> list[float]:
    # mu t = -4t(1+lam) - 3(lam+r) and mu = -3t  =>  3t^2 - 4(1+lam)t - 3(lam+r) = 0
    return [-3 * t for t in quadratic_roots(3.0, -4.0 * (1 + lam), -3.0 * (lam + r))]


def _shifted(d: RegularGraphData) -> list[float]:
    return [-2.0 * (1 + x) for x in d.others()]


def _need_r2(d: RegularGraphData, name: str) -> None:
    if d.r < 2:
        raise HypothesisError(f"{name} needs the subdivided operand to have r >= 2, got r = {d.r}")


def _need_noncomplete(d: RegularGraphData, name: str) -> None:
    if d.complete:
        raise HypothesisError(f"{name} needs a non-complete regular operand, got {d.label or 'K_p'}")


# ---------------------------------------------------------------------------
# predictors


def sv_join_quotient(d1: RegularGraphData, d2: RegularGraphData) -> np.ndarray:
    p1, q1, r1, p2, r2 = d1.p, d1.q, d1.r, d2.p, d2.r
    return np.array([
        [0, 3 * q1 - 3 * r1, 0],
        [3 * p1 - 6, 4 * q1 - 8 * r1 + 4, 2 * p2],
        [0, 2 * q1, 2 * (p2 - r2 - 1)],
    ], dtype=float)


def predict_sv_join(d1: RegularGraphData, d2: RegularGraphData) -> Spectrum:
    """Eccentricity spectrum of the subdivision-vertex join of two regular graphs."""
    _need_r2(d1, "subdivision-vertex join")
    vals = [4.0] * (d1.q - d1.p) + _shifted(d2)
    for lam in d1.others():
        vals += _sv_pair(lam + d1.r)
    vals += small_eigenvalues(sv_join_quotient(d1, d2))
    return group(vals)


def se_join_quotient(d1: RegularGraphData, d2: RegularGraphData) -> np.ndarray:
    p1, q1, r1, p2, r2 = d1.p, d1.q, d1.r, d2.p, d2.r
    return np.array([
        [4 * (p1 - 1 - r1), 3 * (q1 - r1), 2 * p2],
        [3 * (p1 - 2), 0, 0],
        [2 * p1, 0, 2 * (p2 - r2 - 1)],
    ], dtype=float)


def predict_se_join(d1: RegularGraphData, d2: RegularGraphData) -> Spectrum:
    """Eccentricity spectrum of the subdivision-edge join of two regular graphs."""
    _need_r2(d1, "subdivision-edge join")
    vals = [0.0] * (d1.q - d1.p) + _shifted(d2)
    for lam in d1.others():
        vals += _se_pair(lam, d1.r)
    vals += small_eigenvalues(se_join_quotient(d1, d2))
    return group(vals)


def predict_join_k1(d: RegularGraphData) -> Spectrum:
    _need_noncomplete(d, "join with K1")
    a = d.p - d.r - 1
    root = math.sqrt(a * a + d.p)
    return group([a + root, a - root] + _shifted(d))


def predict_self_join(d: RegularGraphData) -> Spectrum:
    _need_noncomplete(d, "self join")
    once = [2.0 * (d.p - d.r - 1)] + _shifted(d)
    return group(once + once)


def join_union_quotient(d0, d1, d2) -> np.ndarray:
    return np.array([
        [2 * (d0.p - 1 - d0.r), 0, 0],
        [0, 2 * (d1.p - 1 - d1.r), 2 * d2.p],
        [0, 2 * d1.p, 2 * (d2.p - 1 - d2.r)],
    ], dtype=float)


def predict_join_union(d0: RegularGraphData, d1: RegularGraphData, d2: RegularGraphData) -> Spectrum:
    """Eccentricity spectrum of ``G0 v (G1 u G2)``.

    The block form behind the formula needs every vertex of ``G0`` to have
    eccentricity 2, i.e. ``G0`` non-complete; a complete ``G0`` is rejected.
    """
    _need_noncomplete(d0, "join with a disjoint union (first operand)")
    vals = _shifted(d0) + _shifted(d1) + _shifted(d2)
    vals += small_eigenvalues(join_union_quotient(d0, d1, d2))
    return group(vals)


def sv_join_union_quotient(d0, d1, d2) -> np.ndarray:
    p0, q0, r0 = d0.p, d0.q, d0.r
    p1, r1, p2, r2 = d1.p, d1.r, d2.p, d2.r
    return np.array([
        [0, 3 * (q0 - r0), 0, 0],
        [3 * (p0 - 2), 4 * (q0 - 2 * r0 + 1), 2 * p1, 2 * p2],
        [0, 2 * q0, 2 * (p1 - r1 - 1), 2 * p2],
        [0, 2 * q0, 2 * p1, 2 * (p2 - r2 - 1)],
    ], dtype=float)


def predict_sv_join_union(d0: RegularGraphData, d1: RegularGraphData, d2: RegularGraphData) -> Spectrum:
    _need_r2(d0, "subdivision-vertex join with a union")
    vals = [4.0] * (d0.q - d0.p) + _shifted(d1) + _shifted(d2)
    for lam in d0.others():
        vals += _sv_pair(lam + d0.r)
    vals += small_eigenvalues(sv_join_union_quotient(d0, d1, d2))
    return group(vals)


def se_join_union_quotient(d0, d1, d2) -> np.ndarray:
    p0, q0, r0 = d0.p, d0.q, d0.r
    p1, r1, p2, r2 = d1.p, d1.r, d2.p, d2.r
    return np.array([
        [4 * (p0 - 1 - r0), 3 * (q0 - r0), 2 * p1, 2 * p2],
        [3 * (p0 - 2), 0, 0, 0],
        [2 * p0, 0, 2 * (p1 - 1 - r1), 2 * p2],
        [2 * p0, 0, 2 * p1, 2 * (p2 - 1 - r2)],
    ], dtype=float)


def predict_se_join_union(d0: RegularGraphData, d1: RegularGraphData, d2: RegularGraphData) -> Spectrum:
    _need_r2(d0, "subdivision-edge join with a union")
    vals = [0.0] * (d0.q - d0.p) + _shifted(d1) + _shifted(d2)
    for lam in d0.others():
        vals += _se_pair(lam, d0.r)
    vals += small_eigenvalues(se_join_union_quotient(d0, d1, d2))
    return group(vals)


# ---------------------------------------------------------------------------
# Wiener index and spectral radius bounds


def wiener_sv_join(p1: int, q1: int, r1: int, p2: int, r2: int) -> Fraction:
    if r1 < 2:
        raise HypothesisError(f"formula needs r1 >= 2, got {r1}")
    return q1 * (3 * p1 - 4 * r1 + 2 * q1 - 1) + p2 * (p2 + 2 * q1 - r2 - 1) - Fraction(3 * r1 * p1, 2)


def wiener_se_join(p1: int, q1: int, r1: int, p2: int, r2: int) -> Fraction:
    if r1 < 2:
        raise HypothesisError(f"formula needs r1 >= 2, got {r1}")
    return (2 * p1 * p1 + p2 * p2 - Fraction(p1, 2) * (4 - 4 * p2 + 7 * r1)
            + 3 * q1 * (p1 - 1) - p2 * (r2 + 1))


def rho_bounds(variant: str, p1: int, q1: int, r1: int, p2: int, r2: int) -> Fraction:
    """Lower bound ``2 W / n`` on the eccentricity spectral radius of the composite."""
    if variant == "sv_join":
        w = wiener_sv_join(p1, q1, r1, p2, r2)
    elif variant == "se_join":
        w = wiener_se_join(p1, q1, r1, p2, r2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return 2 * w / (p1 + q1 + p2)


# ---------------------------------------------------------------------------
# verification against the numeric route


@dataclass(frozen=True)
class Theorem:
    id: str
    arity: int
    predict: Callable[..., Spectrum]
    build: Callable[..., Graph]
    description: str


def _build_join_union(g0, g1, g2):
    return join(g0, disjoint_union([g1, g2]))


def _build_sv_join_union(g0, g1, g2):
    return subdivision_vertex_join(g0, disjoint_union([g1, g2]))


def _build_se_join_union(g0, g1, g2):
    return subdivision_edge_join(g0, disjoint_union([g1, g2]))


THEOREMS: dict[str, Theorem] = {t.id: t for t in [
    Theorem("sv-join", 2, predict_sv_join, subdivision_vertex_join, "subdivision-vertex join G1 svj G2"),
    Theorem("se-join", 2, predict_se_join, subdivision_edge_join, "subdivision-edge join G1 sej G2"),
    Theorem("join-k1", 1, predict_join_k1, lambda g: join(g, Graph([[0]], "K1")), "join G v K1"),
    Theorem("self-join", 1, predict_self_join, lambda g: join(g, g), "join G v G"),
    Theorem("join-union", 3, predict_join_union, _build_join_union, "G0 v (G1 u G2)"),
    Theorem("sv-join-union", 3, predict_sv_join_union, _build_sv_join_union, "G0 svj (G1 u G2)"),
    Theorem("se-join-union", 3, predict_se_join_union, _build_se_join_union, "G0 sej (G1 u G2)"),
]}


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    operands: tuple[str, ...]
    order: int
    predicted: Spectrum
    computed: Spectrum
    max_deviation: float
    tol: float
    passed: bool
    integral: bool

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "operands": list(self.operands),
            "order": self.order,
            "predicted": self.predicted.to_json(),
            "computed": self.computed.to_json(),
            "max_deviation": None if math.isinf(self.max_deviation) else float(f"{self.max_deviation:.6g}"),
            "tol": self.tol,
            "result": "PASS" if self.passed else "FAIL",
            "integral": self.integral,
        }


def verify(theorem_id: str, graphs: Sequence[Graph], tol: float = COMPARE_TOL,
           group_tol: float = GROUP_TOL) -> VerificationReport:
    """Predict from the closed form, compute numerically, compare.

    Hypothesis violations (non-regular operands, ``r < 2`` ...) propagate as
    :class:`HypothesisError` before anything is built.
    """
    try:
        thm = THEOREMS[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem_id!r}; expected one of {', '.join(THEOREMS)}") from None
    if len(graphs) != thm.arity:
        raise ValueError(f"{theorem_id} takes {thm.arity} operand(s), got {len(graphs)}")
    data = [regular_data(g) for g in graphs]
    predicted = thm.predict(*data)
    built = thm.build(*graphs)
    computed = group(sym_eigenvalues(eccentricity_matrix(built)), group_tol)
    dev = max_deviation(group(predicted.values(), group_tol), computed)
    return VerificationReport(
        theorem=theorem_id,
        operands=tuple(g.label or "?" for g in graphs),
        order=built.n,
        predicted=predicted,
        computed=computed,
        max_deviation=dev,
        tol=tol,
        passed=dev <= tol,
        integral=is_integral(computed),
    )
