"""Two-parameter q-deformed sl(2) family: classification, ladder matrices, Casimir.

An algebra in the family is labelled by the pair (a2, a1) together with the
deformation parameter q; the generators satisfy

    [A0, A+-] = +-A+-,
    [A-, A+]  = (q - 1/q) (a1 q^(2 A0) - a2 q^(-2 A0)),

and the lowest-weight module with offset mu > 0 is realised on basis states
e_0..e_{D-1} with A0 e_n = (n + mu) e_n and ladder amplitudes r_n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import numerics
from .qseries import validate_q_base

__all__ = [
    "AlgebraType",
    "AlgebraSpec",
    "LadderRep",
    "NonUnitaryRepresentation",
    "classify",
    "g_func",
    "r_squared",
    "casimir_eigenvalue",
    "build_ladder_rep",
    "casimir_matrix",
    "relation_residuals",
    "RelationResiduals",
]


class AlgebraType(enum.Enum):
    """Named special cases of the (a2, a1) family."""

    SUQ2 = "su_q(2)"
    SUQ11 = "su_q(1,1)"
    CUQ2 = "cu_q(2)"
    EUQ_PLUS = "eu_q(+)"
    EUQ_MINUS = "eu_q(-)"
    M2 = "M(2)"
    OTHER = "other"


# Human-readable sign/q condition for each named case, keyed by (type, q > 1).
_TYPE_CONDITIONS = {
    (AlgebraType.SUQ2, True): "a2 = a1 > 0 and q > 1",
    (AlgebraType.SUQ2, False): "a2 = a1 < 0 and 0 < q < 1",
    (AlgebraType.SUQ11, True): "a2 = a1 < 0 and q > 1",
    (AlgebraType.SUQ11, False): "a2 = a1 > 0 and 0 < q < 1",
    (AlgebraType.CUQ2, True): "a2 = -a1 < 0 and q > 1",
    (AlgebraType.CUQ2, False): "a2 = -a1 > 0 and 0 < q < 1",
    (AlgebraType.EUQ_PLUS, True): "a2 < 0, a1 = 0 and q > 1",
    (AlgebraType.EUQ_PLUS, False): "a2 > 0, a1 = 0 and 0 < q < 1",
    (AlgebraType.EUQ_MINUS, True): "a2 = 0, a1 > 0 and q > 1",
    (AlgebraType.EUQ_MINUS, False): "a2 = 0, a1 < 0 and 0 < q < 1",
    (AlgebraType.M2, True): "a2 = a1 = 0",
    (AlgebraType.M2, False): "a2 = a1 = 0",
    (AlgebraType.OTHER, True): "no named sign pattern matches",
    (AlgebraType.OTHER, False): "no named sign pattern matches",
}


class NonUnitaryRepresentation(ValueError):
    """Unitary ladder requested but some squared amplitude is not positive."""

    def __init__(self, n: int, value: float):
        self.n = n
        self.value = value
        super().__init__(f"r_{n}^2 = {value} <= 0: no unitary lowest-weight ladder")


@dataclass(frozen=True)
class AlgebraSpec:
    """The triple (a2, a1, q) selecting one algebra of the family."""

    a2: float
    a1: float
    q: float

    def __post_init__(self):
        validate_q_base(self.q)


def classify(spec: AlgebraSpec) -> AlgebraType:
    """Total classification of (a2, a1, q) into the named special cases.

    (0, 0) is the Euclidean M(2) contraction; sign patterns covered by no
    named case map to OTHER.
    """
    a2, a1, q = spec.a2, spec.a1, spec.q
    if a2 == 0.0 and a1 == 0.0:
        return AlgebraType.M2
    big_q = q > 1.0
    if a2 == a1:
        if (a2 > 0 and big_q) or (a2 < 0 and not big_q):
            return AlgebraType.SUQ2
        return AlgebraType.SUQ11
    if a2 == -a1:
        if (a2 < 0 and big_q) or (a2 > 0 and not big_q):
            return AlgebraType.CUQ2
        return AlgebraType.OTHER
    if a1 == 0.0:
        if (a2 < 0 and big_q) or (a2 > 0 and not big_q):
            return AlgebraType.EUQ_PLUS
        return AlgebraType.OTHER
    if a2 == 0.0:
        if (a1 > 0 and big_q) or (a1 < 0 and not big_q):
            return AlgebraType.EUQ_MINUS
        return AlgebraType.OTHER
    return AlgebraType.OTHER


def type_condition(t: AlgebraType, q: float) -> str:
    """The sign/q condition that the classification matched."""
    return _TYPE_CONDITIONS[(t, q > 1.0)]


def g_func(spec: AlgebraSpec, x: float) -> float:
    """Structure function g(x) = a1 q^(2x) + a2 q^(-2x)."""
    return spec.a1 * spec.q ** (2 * x) + spec.a2 * spec.q ** (-2 * x)


def r_squared(spec: AlgebraSpec, mu: float, n: int) -> float:
    """Squared ladder amplitude r_n^2 = (q^n - q^-n)(a1 q^(2mu-1+n) - a2 q^(1-n-2mu)).

    Exactly zero at n = 0 (the vacuum)."""
    q = spec.q
    return (q**n - q ** (-n)) * (
        spec.a1 * q ** (2 * mu - 1 + n) - spec.a2 * q ** (1 - n - 2 * mu)
    )


def casimir_eigenvalue(spec: AlgebraSpec, mu: float) -> float:
    """Scalar Casimir value Q(mu) = -a1 q^(2mu-1) - a2 q^(1-2mu) on the mu-ladder."""
    q = spec.q
    return -spec.a1 * q ** (2 * mu - 1) - spec.a2 * q ** (1 - 2 * mu)


@dataclass(frozen=True)
class LadderRep:
    """Truncated matrix realisation of one lowest-weight ladder.

    unitary=True stores amplitudes r_n on the sub/super-diagonal with
    Am = Ap^T; raw mode stores r_n^2 on the subdiagonal of Ap and ones on the
    superdiagonal of Am (unnormalised basis), which realises the same
    commutation relations when some r_n^2 <= 0.
    """

    spec: AlgebraSpec
    mu: float
    dim: int
    unitary: bool
    A0: np.ndarray = field(repr=False)
    Ap: np.ndarray = field(repr=False)
    Am: np.ndarray = field(repr=False)
    rsq: np.ndarray = field(repr=False)

    @property
    def q(self) -> float:
        return self.spec.q

    def weight_diagonal(self) -> np.ndarray:
        """A0 diagonal entries n + mu."""
        return np.arange(self.dim) + self.mu

    def q_power_weight(self, exponent_scale: float) -> np.ndarray:
        """Diagonal matrix q^(exponent_scale * A0)."""
        return np.diag(self.q ** (exponent_scale * self.weight_diagonal()))


def build_ladder_rep(
    spec: AlgebraSpec, mu: float, dim: int, mode: str = "auto"
) -> LadderRep:
    """Construct the truncated ladder matrices on e_0..e_{dim-1}.

    Parameters
    ----------
    spec : AlgebraSpec
    mu : float
        Positive weight offset of the lowest-weight state.
    dim : int
        Truncation size, >= 2.  rsq carries dim+1 entries (n = 0..dim) so the
        first amplitude above the truncation edge stays available to callers.
    mode : {"auto", "unitary", "raw"}
        auto picks unitary when every interior r_n^2 is positive.

    Raises
    ------
    NonUnitaryRepresentation
        mode="unitary" but some r_n^2 <= 0 (reports the first offending n).
    """
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    if not mu > 0:
        raise ValueError(f"weight offset mu must be positive, got {mu}")
    if mode not in ("auto", "unitary", "raw"):
        raise ValueError(f"unknown mode {mode!r}")
    rsq = np.array([r_squared(spec, mu, n) for n in range(dim + 1)])
    positive = bool((rsq[1:dim] > 0).all())
    if mode == "unitary" and not positive:
        bad = int(np.argmax(rsq[1:dim] <= 0)) + 1
        raise NonUnitaryRepresentation(bad, float(rsq[bad]))
    unitary = positive if mode == "auto" else (mode == "unitary")
    A0 = np.diag(np.arange(dim) + mu)
    Ap = np.zeros((dim, dim))
    Am = np.zeros((dim, dim))
    for n in range(1, dim):
        if unitary:
            r = float(np.sqrt(rsq[n]))
            Ap[n, n - 1] = r
            Am[n - 1, n] = r
        else:
            Ap[n, n - 1] = rsq[n]
            Am[n - 1, n] = 1.0
    return LadderRep(spec=spec, mu=mu, dim=dim, unitary=unitary, A0=A0, Ap=Ap, Am=Am, rsq=rsq)


def casimir_matrix(rep: LadderRep) -> np.ndarray:
    """Casimir realisation A+ A- - g(A0 - 1/2), evaluated entrywise on the diagonal.

    The lowering-first ordering keeps every row exact under truncation, so the
    result is diagonal with all entries equal to Q(mu).
    """
    weights = rep.weight_diagonal() - 0.5
    g = rep.spec.a1 * rep.q ** (2 * weights) + rep.spec.a2 * rep.q ** (-2 * weights)
    return rep.Ap @ rep.Am - np.diag(g)


@dataclass(frozen=True)
class RelationResiduals:
    """Relative Frobenius residuals of the defining relations on the interior."""

    raise_weight: float  # [A0, A+] - A+
    lower_weight: float  # [A0, A-] + A-
    ladder: float  # [A-, A+] - (q - 1/q)(a1 q^(2 A0) - a2 q^(-2 A0))

    def max(self) -> float:
        return max(self.raise_weight, self.lower_weight, self.ladder)


def relation_residuals(rep: LadderRep) -> RelationResiduals:
    """Check the defining relations on the truncation-safe interior e_0..e_{D-2}.

    Residuals are Frobenius norms normalised by the scale of the operator the
    relation reproduces; the top basis state is excluded because truncation
    breaks [A-, A+] there by construction.
    """
    D = rep.dim
    sl = slice(0, D - 1)
    q = rep.spec.q
    comm_p = numerics.commutator(rep.A0, rep.Ap) - rep.Ap
    comm_m = numerics.commutator(rep.A0, rep.Am) + rep.Am
    weights = rep.weight_diagonal()
    rhs = (q - 1.0 / q) * (
        rep.spec.a1 * np.diag(q ** (2 * weights)) - rep.spec.a2 * np.diag(q ** (-2 * weights))
    )
    comm_l = numerics.commutator(rep.Am, rep.Ap) - rhs
    scale_p = numerics.frobenius(rep.Ap[sl, sl])
    scale_m = numerics.frobenius(rep.Am[sl, sl])
    scale_l = max(
        numerics.frobenius(rhs[sl, sl]),
        numerics.frobenius((rep.Am @ rep.Ap)[sl, sl]),
    )
    return RelationResiduals(
        raise_weight=numerics.relative_to_scale(numerics.frobenius(comm_p[sl, sl]), scale_p),
        lower_weight=numerics.relative_to_scale(numerics.frobenius(comm_m[sl, sl]), scale_m),
        ladder=numerics.relative_to_scale(numerics.frobenius(comm_l[sl, sl]), scale_l),
    )
