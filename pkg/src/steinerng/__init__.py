"""Exact generalized edge-connectivity (Steiner tree packing) for small graphs, with Nordhaus-Gaddum bound checks."""

from .graph import (
    Graph,
    GraphFormatError,
    UnsupportedSizeError,
    complement,
    edge_connectivity,
    encode_graph6,
    from_edges,
    is_connected,
    parse_graph6,
)
from .packing import (
    LambdaResult,
    SteinerTree,
    TerminalSet,
    TreePacking,
    lambda_k,
    pack_trees,
    steiner_local_lambda,
    verify_packing,
)
from .spanning import near_complete_stp_bound, nwt_partition_bound, stp_number

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphFormatError", "UnsupportedSizeError", "complement", "edge_connectivity",
    "encode_graph6", "from_edges", "is_connected", "parse_graph6",
    "LambdaResult", "SteinerTree", "TerminalSet", "TreePacking", "lambda_k", "pack_trees",
    "steiner_local_lambda", "verify_packing",
    "near_complete_stp_bound", "nwt_partition_bound", "stp_number",
]
