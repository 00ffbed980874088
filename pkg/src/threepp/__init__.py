"""Local-search 4/3-approximation for 3-path partition, with an exact
subset-DP oracle for small graphs."""

from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    gen_random,
    graph_from_edges,
    named_graph,
    neighbors,
    parse_graph,
    read_graph,
    write_graph,
)
from .localsearch import (
    LocalMove,
    MoveError,
    OpKind,
    SolveReport,
    apply_move,
    check_move,
    construct_replacement,
    find_op_3_0,
    find_op_3_1,
    find_op_4_1,
    find_op_4_2,
    next_move,
    path_variants,
    solve,
)
from .oracle import OracleCapError, OracleResult, min_singletons_exact, optimal_partition
from .partition import PartitionStats, PathPartition, stats, validate
from .seed import SeedConfig, SeedError, initial_partition
from .tight import gen_tight_candidate

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "GraphFormatError",
    "gen_random",
    "graph_from_edges",
    "named_graph",
    "neighbors",
    "parse_graph",
    "read_graph",
    "write_graph",
    "LocalMove",
    "MoveError",
    "OpKind",
    "SolveReport",
    "apply_move",
    "check_move",
    "construct_replacement",
    "find_op_3_0",
    "find_op_3_1",
    "find_op_4_1",
    "find_op_4_2",
    "next_move",
    "path_variants",
    "solve",
    "OracleCapError",
    "OracleResult",
    "min_singletons_exact",
    "optimal_partition",
    "PartitionStats",
    "PathPartition",
    "stats",
    "validate",
    "SeedConfig",
    "SeedError",
    "initial_partition",
    "gen_tight_candidate",
]
