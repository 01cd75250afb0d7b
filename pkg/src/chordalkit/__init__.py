"""chordalkit: chordal graph recognition with perfectly nested sequences.

Every verdict comes with a certificate that can be re-checked independently:
a stationary perfectly nested sequence for chordal graphs, an induced cycle of
length at least four otherwise. Only finite graphs are supported.
"""

from .coloring import (
    Coloring,
    R1Report,
    check_r1,
    chromatic_number_exact,
    clique_number_chordal,
    clique_number_exact,
    exact_coloring,
    greedy_coloring,
    maximal_cliques_chordal,
    maximal_cliques_exact,
)
from .errors import (
    BadProbability,
    BadSize,
    ChordalKitError,
    CyclicInput,
    InvalidSequence,
    LoopEdge,
    NotAPeo,
    NotAPermutation,
    NotStalled,
    ParseError,
    TooLarge,
    UnknownVertex,
)
from .generators import (
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_path,
    gen_random_chordal,
    gen_random_graph,
    gen_star,
)
from .graph import (
    Graph,
    adjacency,
    connected_components,
    graph_from_edges,
    induced_subgraph,
    is_clique,
    is_connected,
)
from .nested import (
    AllPerfect,
    Condition,
    NestedSequence,
    RandomSubset,
    SingleLowest,
    Stalled,
    VerificationReport,
    build_stationary_sequence,
    peo_from_sequence,
    verify_peo,
    verify_perfectly_nested,
)
from .orientation import (
    Orientation,
    SpectrumReport,
    dependent_arcs,
    dependent_arcs_by_reversal,
    is_acyclic,
    orient_by_ordering,
    orientation_spectrum,
)
from .perfection import is_perfect_vertex, perfect_set
from .recognition import (
    Chordal,
    ChordlessCycle,
    NotChordal,
    brute_force_chordal,
    find_chordless_cycle,
    is_chordal,
    is_chordal_mcs,
    verify_certificate,
)

__version__ = "0.1.0"
