"""Rainbow connectivity toolkit.

Exact solvers and verifiers for rainbow connectivity, compilers from 3-CNF
into hardness instances, and randomized/derandomized colorings for dense
graphs.  See the README for the file formats and the CLI.
"""

from .graphs import (
    EdgeColoring,
    Graph,
    GraphError,
    PairSet,
    PartialEdgeColoring,
    Partition,
    build_graph,
    clique_graph,
    complete_bipartite_graph,
    cycle_graph,
    diameter,
    diameter_bound_check,
    gen_named,
    gnp_graph,
    is_connected,
    make_pair_set,
    make_partition,
    min_degree,
    path_graph,
    spanning_tree,
    star_graph,
)
from .verify import (
    ConnectivityReport,
    RainbowWitness,
    is_rainbow_connected,
    is_refinement,
    pairs_rainbow_connected,
    rainbow_path_exists,
)
from .solver import (
    RcResult,
    decide_rc_k,
    extend_rc2,
    rc_exact,
    subset_rc2,
    tree_coloring,
)
from .cnf import (
    Cnf3,
    CnfError,
    NormalizeResult,
    NormalStatus,
    is_normalized,
    normalize_cnf,
    parse_cnf,
    sat_brute,
)
from .gadgets import (
    ExtendGadget,
    StGadget,
    WrapGadget,
    gadget_extend_rc2,
    gadget_st_rainbow,
    gadget_verify_wrap,
)
from .probcolor import (
    CaseEvidence,
    CaseTag,
    DerandResult,
    DiameterViolation,
    PathFamily,
    compose_tree_refinement,
    connecting_tree,
    derand_8_coloring,
    derand_rc3,
    greedy_matching,
    las_vegas_rc3,
    pair_evidence,
    partition_pipeline,
    path_family,
    random_k_coloring,
)

__version__ = "0.1.0"
