"""Exact toolkit for P4-sparse / P4-extendible graphs and polar partitions.

The package splits into five layers: ``graphs`` (bitset small-graph kernel
with canonical forms, graph6, and exhaustive enumeration), ``classes``
(recognition, spider decomposition, constructive generation), ``polarity``
(exact (s,k)-polar / unipolar partition solvers), ``obstructions`` (minimal
obstruction verification, enumeration, recursive construction, published
catalogs, and a claim harness), and ``cli`` (graph6 stream front end).
"""

from .classes import (
    CLASS_IDS,
    DecompTree,
    ExtSpiderPartition,
    SpiderPartition,
    build_decomposition,
    extension_set,
    find_ext_spider,
    find_spider,
    generate_class,
    is_62_graph,
    is_cograph,
    is_p4_extendible,
    is_p4_sparse,
    rebuild,
    sigma_j,
    sigma_sep,
    tau_j,
)
from .errors import (
    BadParameter,
    CapExceeded,
    Graph6Error,
    LoopRejected,
    MalformedHeader,
    NotAP4,
    NotInClass,
    PolarityLabError,
    TrailingGarbage,
    TruncatedBody,
    UnknownClaim,
    UnknownId,
    UnknownName,
    VertexOutOfRange,
)
from .graphs import (
    Graph,
    canonical_form,
    canonical_key,
    catalog,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    from_edges,
    graph6_decode,
    graph6_encode,
    headless_spider,
    is_isomorphic,
    join,
    join_all,
    list_induced_p4s,
    path_graph,
    union_all,
)
from .obstructions import (
    ClaimReport,
    ObstructionReport,
    catalog_list,
    construct_s1_obstructions,
    enumerate_minimal_obstructions,
    is_antichain,
    is_minimal_obstruction,
    s1_fixed_family,
    verify_claim,
)
from .polarity import (
    MONOPOLAR,
    POLAR,
    SPLIT,
    UNIPOLAR,
    PolarPartition,
    PolarSpec,
    find_polar_partition,
    is_cluster,
    is_complete_multipartite,
    is_split,
    parse_spec,
    satisfies,
    sk_polar,
)

__version__ = "0.1.0"
