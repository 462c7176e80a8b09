"""Inducibility laboratory for 2-jump circulant (double loop) graphs.

Exact induced-copy census, exhaustive small-order extremal search,
sequential-choice tuple probabilities, and closed-form bound evaluation.
"""

from .bounds import (
    BoundReport,
    GapReport,
    bipartite_ind,
    conj_disj_lower,
    cycle_count_upper,
    cycle_ind_upper_pg,
    dlg_count_upper,
    dlg_ind_upper,
    gap_report,
    known_inducibility,
    kral_count_upper,
    kral_ind_upper,
    path_bounds,
    pg_lower,
    pg_lower_stirling,
)
from .census import (
    CountResult,
    ResourceGuardError,
    SearchResult,
    bipartite_count,
    construction_count_k6,
    count_induced,
    density,
    density_sequence,
    extremal_search,
    find_copies,
    multipartite_dlg6_density,
    search_corpus,
    search_exhaustive,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import (
    Graph,
    are_isomorphic,
    blow_up,
    complement,
    find_isomorphism,
    induced_subgraph,
    iterated_blow_up,
    make_chain,
    make_circulant,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_dlg,
    make_paley,
    make_path,
    random_graph,
)
from .loopy import (
    CorrespondenceReport,
    ProbabilityTrace,
    RotationReport,
    TheoremReport,
    copy_labelings,
    correspondence_check,
    enumerate_loopy,
    extend_candidates,
    is_good_tuple,
    lemma_sum,
    rotation_bound_check,
    theorem_bound_check,
    tuple_probability,
)

__version__ = "0.1.0"
