"""Cut-preserving sparsification workbench for unweighted multigraphs."""

from .errors import (
    CutkitError,
    EdgeListFormatError,
    EdgeOutOfRange,
    EndpointOutOfRange,
    InvalidSpec,
    InvariantViolation,
    IterationCapExceeded,
    LevelOutOfRange,
    SameVertex,
    SelfLoop,
    SizeMismatch,
    TooFewVertices,
    TooManyVertices,
)
from .graph import (
    Cut,
    Multigraph,
    VertexPartition,
    WeightedGraph,
    build_multigraph,
    build_weighted_graph,
    connected_components,
    contract,
    cut_weight,
)
from .io import as_unit_weighted, format_edge_list, parse_edge_list, read_graph, write_graph
from .forests import ForestLabeling, decompose, prefix_connectivity, prefix_edges
from .oracle import (
    CutErrorReport,
    enumerate_cuts,
    is_k_heavy,
    max_flow_unit,
    max_relative_cut_error,
)
from .sparsify import (
    DEFAULT_RHO_CONSTANT,
    DEFAULT_SAMPLING_CONSTANT,
    HeavyReduction,
    LevelRecord,
    SparsifyConfig,
    SparsifyTrace,
    compute_rho,
    final_sample,
    half_sample,
    initial_split,
    reconstruct_intermediate,
    reduce_to_heavy,
    sparsify,
    verify_trace_invariants,
)
from .generators import GeneratorSpec, families, generate
from .report import BenchRow, format_table, render_figure, run_bench
from .cli import run_cli

__version__ = "0.1.0"

__all__ = [
    "CutkitError",
    "EdgeListFormatError",
    "EdgeOutOfRange",
    "EndpointOutOfRange",
    "InvalidSpec",
    "InvariantViolation",
    "IterationCapExceeded",
    "LevelOutOfRange",
    "SameVertex",
    "SelfLoop",
    "SizeMismatch",
    "TooFewVertices",
    "TooManyVertices",
    "Cut",
    "Multigraph",
    "VertexPartition",
    "WeightedGraph",
    "build_multigraph",
    "build_weighted_graph",
    "connected_components",
    "contract",
    "cut_weight",
    "as_unit_weighted",
    "format_edge_list",
    "parse_edge_list",
    "read_graph",
    "write_graph",
    "ForestLabeling",
    "decompose",
    "prefix_connectivity",
    "prefix_edges",
    "CutErrorReport",
    "enumerate_cuts",
    "is_k_heavy",
    "max_flow_unit",
    "max_relative_cut_error",
    "DEFAULT_RHO_CONSTANT",
    "DEFAULT_SAMPLING_CONSTANT",
    "HeavyReduction",
    "LevelRecord",
    "SparsifyConfig",
    "SparsifyTrace",
    "compute_rho",
    "final_sample",
    "half_sample",
    "initial_split",
    "reconstruct_intermediate",
    "reduce_to_heavy",
    "sparsify",
    "verify_trace_invariants",
    "GeneratorSpec",
    "families",
    "generate",
    "BenchRow",
    "format_table",
    "render_figure",
    "run_bench",
    "run_cli",
]
