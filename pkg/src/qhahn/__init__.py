"""Verification lab for composed q-deformed ladder algebras.

Builds truncated lowest-weight matrix realisations of the two-parameter
(a2, a1) family, composes them on the tensor product, certifies that the
sector symmetry operators close into a three-generator quadratic algebra of
Askey-Wilson type, and computes the overlap (Clebsch-Gordan) tables between
the product and coupled eigenbases by three cross-validated methods.
"""

from .algebra import (
    AlgebraSpec,
    AlgebraType,
    LadderRep,
    NonUnitaryRepresentation,
    RelationResiduals,
    build_ladder_rep,
    casimir_eigenvalue,
    casimir_matrix,
    classify,
    g_func,
    r_squared,
    relation_residuals,
)
from .aw3 import (
    AWOperators,
    AWStructure,
    aw_casimir,
    build_aw_operators,
    fit_structure_constants,
    structure_constants,
    verify_aw_relations,
)
from .cg import (
    CGTable,
    QHahnParams,
    cg_by_diagonalization,
    cg_by_qhahn,
    cg_by_recurrence,
    lambda_audit,
    orthogonality_check,
    qhahn_closed_form_audit,
    w_z_closed_form_audit,
)
from .coupling import (
    CoupledRep,
    IncompatibleParameters,
    SectorOutOfRange,
    SectorRep,
    couple,
    coupled_casimir_direct,
    coupled_casimir_factored,
    coupled_relation_residuals,
    sector,
    sector_qc_elements,
)
from .qseries import (
    DenominatorVanishes,
    NonTerminating,
    phi_3_2,
    q_pochhammer,
    qhahn_reference,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "AlgebraType",
    "LadderRep",
    "NonUnitaryRepresentation",
    "RelationResiduals",
    "build_ladder_rep",
    "casimir_eigenvalue",
    "casimir_matrix",
    "classify",
    "g_func",
    "r_squared",
    "relation_residuals",
    "AWOperators",
    "AWStructure",
    "aw_casimir",
    "build_aw_operators",
    "fit_structure_constants",
    "structure_constants",
    "verify_aw_relations",
    "CGTable",
    "QHahnParams",
    "cg_by_diagonalization",
    "cg_by_qhahn",
    "cg_by_recurrence",
    "lambda_audit",
    "orthogonality_check",
    "qhahn_closed_form_audit",
    "w_z_closed_form_audit",
    "CoupledRep",
    "IncompatibleParameters",
    "SectorOutOfRange",
    "SectorRep",
    "couple",
    "coupled_casimir_direct",
    "coupled_casimir_factored",
    "coupled_relation_residuals",
    "sector",
    "sector_qc_elements",
    "DenominatorVanishes",
    "NonTerminating",
    "phi_3_2",
    "q_pochhammer",
    "qhahn_reference",
    "__version__",
]
