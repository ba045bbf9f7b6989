"""Bipartition-averaged multiqubit entanglement measures and state searches."""

from .errors import (
    DegenerateHistogramError,
    EntsearchError,
    InvariantViolationError,
    StateFormatError,
)
from .qstate import (
    PureState,
    bssb4,
    computational_basis_state,
    ghz,
    hs4,
    inner_product,
    load_state,
    overlap,
    perturb,
    random_haar_state,
    save_state,
)
from .partitions import Bipartition, count_bipartitions, enumerate_bipartitions
from .entropy import (
    hermitian_eigenvalues,
    linear_entropy,
    partial_trace,
    purity,
    von_neumann_entropy,
)
from .measures import (
    EntanglementReport,
    MeasureKind,
    e_balanced,
    e_m,
    e_total,
    e_total_both,
)
from .search import (
    Objective,
    Scope,
    SearchConfig,
    SearchResult,
    StartKind,
    compare_scopes,
    hill_climb,
    multi_start,
)
from .landscape import (
    BinnedCurve,
    MaximizerDistribution,
    NeighborhoodSample,
    maximizer_distribution,
    neighborhood_curve,
    sample_with_overlap,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BinnedCurve",
    "DegenerateHistogramError",
    "EntanglementReport",
    "EntsearchError",
    "InvariantViolationError",
    "MaximizerDistribution",
    "MeasureKind",
    "NeighborhoodSample",
    "Objective",
    "PureState",
    "Scope",
    "SearchConfig",
    "SearchResult",
    "StartKind",
    "StateFormatError",
    "bssb4",
    "compare_scopes",
    "computational_basis_state",
    "count_bipartitions",
    "e_balanced",
    "e_m",
    "e_total",
    "e_total_both",
    "enumerate_bipartitions",
    "ghz",
    "hermitian_eigenvalues",
    "hill_climb",
    "hs4",
    "inner_product",
    "linear_entropy",
    "load_state",
    "maximizer_distribution",
    "multi_start",
    "neighborhood_curve",
    "overlap",
    "partial_trace",
    "perturb",
    "purity",
    "random_haar_state",
    "sample_with_overlap",
    "save_state",
    "von_neumann_entropy",
]
