"""Sector symmetry operators, their quadratic closure, and the closure Casimir.

On a fixed sector the pair K1 = q^(-Delta), K2 = restricted coupled Casimir
closes into a three-generator quadratic algebra via the q-mutator
[L, M]_q = q L M - 1/q M L:

    K1^2 K2 + K2 K1^2 - (q^2 + q^-2) K1 K2 K1 + (q - 1/q)^2 (p2 + p1 K1) = 0,
    K2^2 K1 + K1 K2^2 - (q^2 + q^-2) K2 K1 K2 + (q - 1/q)^2 (p1 K2 + t1 K1 + t0) = 0,

with scalar coefficients built from the composition data.  The module
verifies these relations, independently re-fits the scalars from the
operators, and checks centrality of the quadratic Casimir.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import numerics
from .coupling import CoupledRep, SectorRep

__all__ = [
    "AWStructure",
    "AWOperators",
    "build_aw_operators",
    "structure_constants",
    "verify_aw_relations",
    "fit_structure_constants",
    "FitResult",
    "aw_casimir",
    "CasimirReport",
]


@dataclass(frozen=True)
class AWStructure:
    """Scalar structure data of the quadratic closure on one sector."""

    N: int
    p0: float
    p1: float
    p2: float
    t0: float
    t1: float
    b: float
    c1: float
    c2: float
    d1: float
    d2: float
    source: str  # "paper" or "fitted"

    def as_dict(self) -> dict[str, float]:
        return {
            "p0": self.p0,
            "p1": self.p1,
            "p2": self.p2,
            "t0": self.t0,
            "t1": self.t1,
            "B": self.b,
            "C1": self.c1,
            "C2": self.c2,
            "D1": self.d1,
            "D2": self.d2,
        }


@dataclass(frozen=True)
class AWOperators:
    """The symmetry pair, their q-mutator, and the dual combination."""

    q: float
    N: int
    k1: np.ndarray = field(repr=False)
    k2: np.ndarray = field(repr=False)
    k3: np.ndarray = field(repr=False)
    k3_dual: np.ndarray = field(repr=False)


def build_aw_operators(s: SectorRep) -> AWOperators:
    """Assemble K1, K2, K3 = [K1,K2]_q and the dual 1/q K1 K2 - q K2 K1."""
    q = s.q
    k1 = s.k1
    k2 = s.qc
    k3 = q * (k1 @ k2) - (1.0 / q) * (k2 @ k1)
    k3_dual = (1.0 / q) * (k1 @ k2) - q * (k2 @ k1)
    return AWOperators(q=q, N=s.N, k1=k1, k2=k2, k3=k3, k3_dual=k3_dual)


def structure_constants(c: CoupledRep, N: int) -> AWStructure:
    """Evaluate the closure scalars on sector N from the composition data.

    q^(C0) scalarises to q^(N + mu_a + mu_b) on the sector; Q_A, Q_B are the
    factor Casimir values.
    """
    q = c.q
    qc0 = q ** (N + c.mu_a + c.mu_b)
    lam2 = (q - 1.0 / q) ** 2
    p2 = (q + 1.0 / q) * c.d
    p1 = c.qb_value * qc0 + c.qa_value / qc0
    t1 = (q + 1.0 / q) ** 2 * c.spec_c.a2 * c.spec_c.a1
    t0 = (q + 1.0 / q) * (
        c.qb_value * c.spec_c.a2 / qc0 + c.qa_value * c.spec_c.a1 * qc0
    )
    return AWStructure(
        N=N,
        p0=0.0,
        p1=p1,
        p2=p2,
        t0=t0,
        t1=t1,
        b=lam2 * p1,
        c1=lam2 * t1,
        c2=0.0,
        d1=lam2 * t0,
        d2=lam2 * p2,
        source="paper",
    )


def _relation_matrices(ops: AWOperators, st: AWStructure):
    q = ops.q
    k1, k2 = ops.k1, ops.k2
    lam2 = (q - 1.0 / q) ** 2
    eye = np.eye(ops.N + 1)
    k1k2k1 = k1 @ k2 @ k1
    k2k1k2 = k2 @ k1 @ k2
    k1sq = k1 @ k1
    k2sq = k2 @ k2
    r1 = (
        k1sq @ k2
        + k2 @ k1sq
        - (q**2 + q**-2) * k1k2k1
        + lam2 * (st.p2 * eye + st.p1 * k1)
    )
    r2 = (
        k2sq @ k1
        + k1 @ k2sq
        - (q**2 + q**-2) * k2k1k2
        + lam2 * (st.p1 * k2 + st.t1 * k1 + st.t0 * eye)
    )
    scale1 = max(
        numerics.frobenius(k1sq @ k2),
        (q**2 + q**-2) * numerics.frobenius(k1k2k1),
        lam2 * abs(st.p2) * np.sqrt(ops.N + 1),
        lam2 * abs(st.p1) * numerics.frobenius(k1),
    )
    scale2 = max(
        numerics.frobenius(k2sq @ k1),
        (q**2 + q**-2) * numerics.frobenius(k2k1k2),
        lam2 * abs(st.p1) * numerics.frobenius(k2),
        lam2 * abs(st.t1) * numerics.frobenius(k1),
        lam2 * abs(st.t0) * np.sqrt(ops.N + 1),
    )
    return r1, r2, scale1, scale2


def verify_aw_relations(ops: AWOperators, st: AWStructure) -> tuple[float, float]:
    """Relative Frobenius residuals of the two closure relations."""
    r1, r2, scale1, scale2 = _relation_matrices(ops, st)
    return (
        numerics.relative_to_scale(numerics.frobenius(r1), scale1),
        numerics.relative_to_scale(numerics.frobenius(r2), scale2),
    )


@dataclass(frozen=True)
class FitResult:
    """Least-squares audit of the closure scalars."""

    structure: AWStructure
    residual: float
    deviations: dict[str, float]
    degenerate: bool


def fit_structure_constants(ops: AWOperators, reference: AWStructure) -> FitResult:
    """Re-derive the closure scalars by least squares and compare to reference.

    Solves each relation for the scalar coefficients over the span {I, K1}
    (first relation) and {I, K1, K2} (second).  Rank deficiency of either
    design matrix is reported through the degenerate flag, not raised.
    """
    q = ops.q
    k1, k2 = ops.k1, ops.k2
    eye = np.eye(ops.N + 1)
    lam2 = (q - 1.0 / q) ** 2
    lhs1 = k1 @ k1 @ k2 + k2 @ k1 @ k1 - (q**2 + q**-2) * (k1 @ k2 @ k1)
    lhs2 = k2 @ k2 @ k1 + k1 @ k2 @ k2 - (q**2 + q**-2) * (k2 @ k1 @ k2)
    design1 = np.column_stack([eye.ravel(), k1.ravel()])
    design2 = np.column_stack([eye.ravel(), k1.ravel(), k2.ravel()])
    fit1 = numerics.least_squares(design1, -lhs1.ravel())
    fit2 = numerics.least_squares(design2, -lhs2.ravel())
    d2_f, b_f = fit1.solution
    d1_f, c1_f, b2_f = fit2.solution
    fitted = AWStructure(
        N=ops.N,
        p0=0.0,
        p1=b_f / lam2,
        p2=d2_f / lam2,
        t0=d1_f / lam2,
        t1=c1_f / lam2,
        b=b_f,
        c1=c1_f,
        c2=0.0,
        d1=d1_f,
        d2=d2_f,
        source="fitted",
    )
    scale = max(
        abs(reference.b),
        abs(reference.c1),
        abs(reference.d1),
        abs(reference.d2),
        1e-300,
    )
    deviations = {
        "B": abs(b_f - reference.b) / scale,
        "B_second_relation": abs(b2_f - reference.b) / scale,
        "C1": abs(c1_f - reference.c1) / scale,
        "D1": abs(d1_f - reference.d1) / scale,
        "D2": abs(d2_f - reference.d2) / scale,
    }
    residual = max(
        numerics.relative_to_scale(fit1.residual, numerics.frobenius(lhs1), 1.0),
        numerics.relative_to_scale(fit2.residual, numerics.frobenius(lhs2), 1.0),
    )
    return FitResult(
        structure=fitted,
        residual=residual,
        deviations=deviations,
        degenerate=fit1.rank_deficient or fit2.rank_deficient,
    )


@dataclass(frozen=True)
class CasimirReport:
    """Centrality and per-sector scalar character of the closure Casimir."""

    centrality_k1: float
    centrality_k2: float
    centrality_k3: float
    scalar_deviation: float
    scalar_value: float

    def max_centrality(self) -> float:
        return max(self.centrality_k1, self.centrality_k2, self.centrality_k3)


def aw_casimir(ops: AWOperators, st: AWStructure) -> tuple[np.ndarray, CasimirReport]:
    """Quadratic central element of the closure and its commutator residuals.

    Q = 1/2 {K3, K3~} + (q^2 + q^-2)/2 C1 K1^2 + B {K1, K2}
        + (q + 1/q)^2 / 2 (D1 K1 + D2 K2).

    The three centrality residuals are ||[Q, K_i]||_F / (||Q||_F ||K_i||_F).
    The deviation of Q from a multiple of the identity is reported, not
    asserted; on an irreducible sector centrality forces it to vanish.
    """
    q = ops.q
    k1, k2, k3, k3d = ops.k1, ops.k2, ops.k3, ops.k3_dual
    m = ops.N + 1
    Q = (
        0.5 * numerics.anticommutator(k3, k3d)
        + 0.5 * (q**2 + q**-2) * st.c1 * (k1 @ k1)
        + st.b * numerics.anticommutator(k1, k2)
        + 0.5 * (q + 1.0 / q) ** 2 * (st.d1 * k1 + st.d2 * k2)
    )
    normQ = numerics.frobenius(Q)
    reports = []
    for k in (k1, k2, k3):
        commnorm = numerics.frobenius(numerics.commutator(Q, k))
        reports.append(
            numerics.relative_to_scale(commnorm, normQ * numerics.frobenius(k))
        )
    trace_part = float(np.trace(Q)) / m
    scalar_dev = numerics.relative_to_scale(
        numerics.frobenius(Q - trace_part * np.eye(m)), normQ
    )
    return Q, CasimirReport(
        centrality_k1=reports[0],
        centrality_k2=reports[1],
        centrality_k3=reports[2],
        scalar_deviation=scalar_dev,
        scalar_value=trace_part,
    )
