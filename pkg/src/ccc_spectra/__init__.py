"""Exact spectra and energies of commuting conjugacy class graphs.

Builds the supported finite group families from explicit normal forms,
derives their commuting conjugacy class graphs, computes common
neighborhood (signless) Laplacian spectra and energies in exact rational
arithmetic, and cross-validates everything against closed-form tables.
"""

from .ccc import (
    CccGraph,
    CliqueDecomposition,
    build_ccc_graph,
    decompose_cliques,
    graph_to_dot,
    graph_to_json,
    predicted_structure,
    predicted_structure_for,
)
from .classify import (
    Classification,
    ClaimDiff,
    benchmark_energy,
    check_iff_lists,
    classify,
    classify_closed_form,
)
from .closed_forms import (
    ClosedFormReport,
    closed_form_for,
    d2n_quotient_closed_form,
    family_closed_form,
    quotient_closed_form,
    quotient_route,
    zpzp_closed_form,
)
from .errors import (
    AbelianGroup,
    CccSpectraError,
    InvalidParameters,
    NoConvergence,
    NotCliqueUnion,
    NotRealizable,
    OrderCapExceeded,
    TraceMismatch,
    UnknownQuotient,
    UnsupportedFamily,
    VerificationError,
)
from .groups import (
    CentralQuotientType,
    ConjugacyPartition,
    FamilySpec,
    GroupTable,
    build_group,
    central_quotient_type,
    conjugacy_classes,
    parse_family_spec,
)
from .pipeline import Analysis, analyze, compare_with_closed_form, numeric_agreement
from .spectra import (
    EnergyReport,
    IntMatrix,
    SpectrumMultiset,
    clique_union_spectra,
    cn_matrix,
    cnl_cnsl_matrices,
    energies,
    exact_spectrum_verify,
    numeric_eigenvalues,
)

__version__ = "0.1.0"
