"""Exact strong domination and strong coalition invariants of small graphs."""

from .coalition import (
    BlockStatus,
    BlockVerdict,
    Partition,
    PartitionError,
    PreconditionError,
    SolveResult,
    coalition_partner_count,
    construct_from_domatic,
    solve,
    upper_bounds,
    validate_partition,
)
from .config import CapacityError
from .domination import (
    PLAIN,
    STRONG,
    DominationStyle,
    count_all_sds,
    domatic,
    enumerate_min_cardinality_sds,
    gamma,
    is_dominating,
)
from .families import OracleAnswer, c_oracle, family_f_member, family_g_check, sc_oracle
from .graph import (
    FamilyGParams,
    Graph,
    GraphParseError,
    VertexSet,
    degree_stats,
    generate,
    parse_edge_list,
    write_edge_list,
)
from .scg import CoalitionGraph, build_scg, export_dot

__version__ = "0.1.0"
