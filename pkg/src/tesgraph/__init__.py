"""Total edge irregularity strength: constructive labellers, exact search, scan harness."""

from tesgraph.bounds import BoundsReport, bounds_report, declared_tes, tree_lambda
from tesgraph.construct import (
    ConjectureViolationError,
    augment_once,
    k5_labelling,
    label_connected,
    label_disconnected,
    label_graph,
)
from tesgraph.exact import BUDGET_EXHAUSTED, SearchBudgetError, SearchConfig, exact_tes, exists_labelling
from tesgraph.graph import (
    EdgeClassSelector,
    Graph,
    GraphError,
    connected_components,
    cross_edges,
    degree,
    from_edge_list,
    is_tree,
    leaves,
    max_degree,
    spanning_decomposition,
)
from tesgraph.labelling import (
    LabellingError,
    TotalLabelling,
    VerificationReport,
    edge_weight,
    verify_irregular,
    weight_multiset,
)
from tesgraph.result import TesResult
from tesgraph.treelabel import (
    InfeasiblePlanError,
    VertexPartition,
    WeightPlan,
    build_weight_plan,
    label_tree,
    partition_tree,
    realize_plan,
)

__all__ = [
    "BoundsReport",
    "BUDGET_EXHAUSTED",
    "ConjectureViolationError",
    "EdgeClassSelector",
    "Graph",
    "GraphError",
    "InfeasiblePlanError",
    "LabellingError",
    "SearchBudgetError",
    "SearchConfig",
    "TesResult",
    "TotalLabelling",
    "VerificationReport",
    "VertexPartition",
    "WeightPlan",
    "augment_once",
    "bounds_report",
    "build_weight_plan",
    "connected_components",
    "cross_edges",
    "declared_tes",
    "degree",
    "edge_weight",
    "exact_tes",
    "exists_labelling",
    "from_edge_list",
    "is_tree",
    "k5_labelling",
    "label_connected",
    "label_disconnected",
    "label_graph",
    "label_tree",
    "leaves",
    "max_degree",
    "partition_tree",
    "realize_plan",
    "spanning_decomposition",
    "tree_lambda",
    "verify_irregular",
    "weight_multiset",
]
