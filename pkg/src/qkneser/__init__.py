"""Exact Gaussian binomial arithmetic and q-Kneser graph spectra.

Everything symbolic is an exact Laurent polynomial in q with big-integer
coefficients; everything numeric is an exact integer or rational.  The
spectrum formulas are certified against brute-force graph construction
over actual finite vector spaces.
"""

from .gf import FieldCtx, factor_prime_power, field_of_order, is_prime, make_field
from .identities import (
    IDENTITY_IDS,
    GridBounds,
    IdentityReport,
    check_corollary1,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_pascal,
    check_theorem2,
    run_grid,
)
from .intmatrix import IntMatrix
from .laurent import ONE, Q, ZERO, LaurentPoly
from .oracle import (
    DEFAULT_VERTEX_BUDGET,
    BudgetExceededError,
    CertificationResult,
    Subspace,
    build_adjacency,
    certify_spectrum,
    enumerate_subspaces,
    gf_rank,
    intersection_dim,
    predicted_vertex_count,
)
from .qbinom import gauss, gauss_eval_product
from .spectrum import (
    SpectrumEntry,
    SpectrumTable,
    delsarte_eigenvalue,
    multiplicity,
    simple_eigenvalue,
    spectrum_table,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CertificationResult",
    "DEFAULT_VERTEX_BUDGET",
    "FieldCtx",
    "GridBounds",
    "IDENTITY_IDS",
    "IdentityReport",
    "IntMatrix",
    "LaurentPoly",
    "ONE",
    "Q",
    "SpectrumEntry",
    "SpectrumTable",
    "Subspace",
    "ZERO",
    "build_adjacency",
    "certify_spectrum",
    "check_corollary1",
    "check_lemma1",
    "check_lemma2",
    "check_lemma3",
    "check_pascal",
    "check_theorem2",
    "delsarte_eigenvalue",
    "enumerate_subspaces",
    "factor_prime_power",
    "field_of_order",
    "gauss",
    "gauss_eval_product",
    "gf_rank",
    "intersection_dim",
    "is_prime",
    "make_field",
    "multiplicity",
    "predicted_vertex_count",
    "run_grid",
    "simple_eigenvalue",
    "spectrum_table",
]
