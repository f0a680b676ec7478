"""Exact and empirical machinery for forbidden K_{2,t} traces in 3-uniform
hypergraphs: detection with certificates, dominated-set algorithms, exact
small-n extremal search, C4-free constructions, and bound evaluation."""

from .bounds import (
    BoundReport,
    C4_WINDOW,
    DerivationPoint,
    Interval,
    default_g,
    derivation_check,
    epsilon,
    high_codegree_bound,
    k2t_upper_bound,
    log_grid,
    medium_codegree_bound,
    quadratic_root,
    ratio_table,
    three_term_upper_bound,
)
from .canon import canonical_form, canonical_index_sequence, is_canonical_labeling
from .constructions import (
    Graph,
    contains_c4,
    dumps_graph,
    greedy_lower_bound,
    lift_to_trace_free,
    loads_graph,
    polarity_graph,
    write_graph,
)
from .dominated import (
    DominatedSetResult,
    LoopVertex,
    Star,
    StarDecomposition,
    Witness,
    dominated_min_degree,
    dominated_pair_min1,
    is_dominated,
    simultaneous_dominated_min_degree,
    star_loop_decomposition,
    witness_for,
)
from .hypergraph import (
    DegreeInequalityReport,
    EdgePartition,
    FormatError,
    Hypergraph3,
    LoopGraph,
    dumps_hypergraph,
    eu_vu,
    link_graph,
    loads_hypergraph,
    neighborhoods,
    partition_edges,
    read_hypergraph,
    verify_degree_inequality,
    write_hypergraph,
)
from .lemma_checks import (
    CheckStatus,
    LemmaViolation,
    check_lemma_invariants,
    lemma_status_report,
)
from .search import (
    CapExceeded,
    SearchConfig,
    SearchResult,
    export_cnf,
    incremental_trace_check,
    trace_templates,
    turan_oracle,
    turan_search,
)
from .traces import (
    SearchTimeout,
    TraceCertificate,
    TracePattern,
    certificate_from_text,
    contains_berge,
    contains_trace,
    contains_trace_naive,
    trace_from_dominated,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
