"""Numerical semigroup invariants with a focus on the reduced type.

Builds numerical semigroups, computes their classical invariants
(conductor, gaps, Apery sets, pseudo-Frobenius numbers, type) and the
reduced type, classifies them (Gorenstein, almost Gorenstein,
pseudo-symmetric, far-flung Gorenstein, finite CM/reflexive representation
type), constructs gluings and duals with verified closed forms, and
exhaustively verifies the structural theorems over all semigroups up to a
genus bound.

The hot kernels run on a compiled extension when available; set
``REDTYPE_PURE=1`` to force the pure-Python fallback.
"""
from ._kernels import backend_name
from .classify import (
    InvariantReport,
    canonical_valuations,
    classify,
    is_almost_gorenstein,
    is_cm_finite,
    is_far_flung_gorenstein,
    is_gorenstein,
    is_minimal_multiplicity,
    is_pseudo_symmetric,
    has_maximal_reduced_type,
    has_minimal_reduced_type,
    mu_overring,
    ref_finiteness,
)
from .construct import GluingSpec, dual, glue
from .core import (
    NumericalSemigroup,
    ValuationSet,
    apery_maximals,
    apery_set,
    build_semigroup,
    cm_type,
    contains,
    length_between,
    pseudo_frobenius,
    reduced_type,
)
from .enumeration import (
    ALL_SUITES,
    SweepResult,
    enumerate_by_genus,
    gapset_gap_tuples,
    genus_counts,
    probe_open_questions,
    run_suite,
    run_suites,
)
from .rohrbach import RohrbachWitness, n_of_set, rohrbach_number

__version__ = "0.1.0"

__all__ = [
    "ALL_SUITES",
    "GluingSpec",
    "InvariantReport",
    "NumericalSemigroup",
    "RohrbachWitness",
    "SweepResult",
    "ValuationSet",
    "apery_maximals",
    "apery_set",
    "backend_name",
    "build_semigroup",
    "canonical_valuations",
    "classify",
    "cm_type",
    "contains",
    "dual",
    "enumerate_by_genus",
    "gapset_gap_tuples",
    "genus_counts",
    "glue",
    "has_maximal_reduced_type",
    "has_minimal_reduced_type",
    "is_almost_gorenstein",
    "is_cm_finite",
    "is_far_flung_gorenstein",
    "is_gorenstein",
    "is_minimal_multiplicity",
    "is_pseudo_symmetric",
    "length_between",
    "mu_overring",
    "n_of_set",
    "probe_open_questions",
    "pseudo_frobenius",
    "reduced_type",
    "ref_finiteness",
    "rohrbach_number",
    "run_suite",
    "run_suites",
    "__version__",
]
