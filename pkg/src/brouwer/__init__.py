"""Verification toolkit for Brouwer's conjecture on Laplacian eigenvalue sums.

The conjecture says that for any simple graph G with m edges, the sum of
the k largest Laplacian eigenvalues satisfies S_k(G) <= m + k(k+1)/2 for
every k = 1..n.  This package computes spectra with a deterministic
eigensolver, evaluates the closed-form bounds and proven k-intervals,
and checks the inequality over exhaustive and random graph corpora.
"""

from .bounds import (
    BoundEvaluation,
    KInterval,
    brouwer_rhs,
    de_caen_m1_bound,
    dense_interval,
    dense_threshold_m,
    evaluate_bounds,
    profile_monotone_limit,
    sk_bound_profile,
    sk_upper_bound,
    sparse_interval,
    sparse_m_cap,
    zhou_bound,
)
from .formats import (
    Graph6ParseError,
    format_edgelist,
    parse_edgelist,
    parse_graph6,
    to_graph6,
)
from .graphs import (
    EXHAUSTIVE_CAP,
    Graph,
    edge_index,
    enumerate_labeled,
    family,
    first_zagreb,
    from_edge_list,
    is_connected,
    random_gnm,
    vertex_pairs,
)
from .spectra import (
    SolverConvergenceError,
    Spectrum,
    complement_l,
    eigenvalues_sym,
    laplacian,
    s_k,
    spectral_tol,
)
from .verify import (
    IdentityReport,
    InternalConsistencyError,
    SweepSummary,
    VerificationRecord,
    check_all_k,
    check_conjecture,
    check_eps,
    check_sk_bound,
    check_zhou,
    exhaustive_sweep,
    interval_cross_check,
    verify_identities,
)

__version__ = "0.1.0"
