"""Graph-state rewriting, foliage partitions, and vertex-minor deciders."""

from .graph import (
    MAX_LABEL,
    Graph,
    UnknownVertexError,
    complement,
    complete_graph,
    connected_components,
    delete_vertex,
    delete_vertices,
    edge_set,
    induced_subgraph,
    local_complement,
    measure_x,
    measure_y,
    measure_z,
    path_graph,
    ring_graph,
    symmetric_difference,
)
from .ops import DELETE, LC, MEASURE_X, MEASURE_Y, MEASURE_Z, Step, apply_step, replay
from .orbit import (
    DEFAULT_NODE_BUDGET,
    BudgetExceededError,
    lc_equivalent,
    lc_orbit,
    lc_orbit_paths,
    lc_path,
)
from .foliage import (
    BlockShape,
    FoliageGraph,
    InvalidPartitionError,
    Partition,
    canonical_foliage_partition,
    classify_block,
    foliage_equivalent,
    foliage_graph,
    foliage_set,
    is_foliage_partition,
    leaves_axils,
    lifted_local_complement,
    nth_foliage_graph,
    singletons,
    star_axil,
    twins,
)
from .minor import (
    ClassFate,
    Decision,
    class_persistence_check,
    decide_vertex_minor,
    extract_foliage_graph,
    foliage_source_reduce,
    foliage_target_reduce,
    source_reduce,
    target_reduce,
)
from .bell import (
    BellQuery,
    NotATreeError,
    decide_bell,
    decide_bell_line,
    decide_bell_ring,
    decide_bell_tree,
    lemma_blockers,
    line_query,
    ring_query,
    tree_query,
)
from .quantum import (
    StateCapError,
    find_measurement_correction,
    graph_state,
    verify_lc_unitary,
    verify_measurement,
)
from .io import FormatError, parse_edge_list, parse_graph6, read_graph, write_edge_list

__version__ = "0.1.0"
