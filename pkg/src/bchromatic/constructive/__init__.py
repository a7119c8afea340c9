"""Frame coloring, bad-edge repair, and the theorem-level procedures."""

from .frame import (
    BadEdgeContext,
    Frame,
    RepairMove,
    analyze_bad_edge,
    color_active_neighborhood,
    dominant_k_colors,
    frame_bad_edge_count,
    frame_bad_edges,
    non_dominant_k_colors,
)
from .procedures import (
    ProcedureReport,
    check_thm22_conditions,
    complete_greedy,
    theorem_2_1_procedure,
    theorem_2_2_procedure,
    theorem_2_3_procedure,
    theorem_3_1_procedure,
    ux_coloring,
)
from .repair import F_LOCAL_KINDS, FULL_CATALOG, repair_to_proper, try_remove_bad_edge

__all__ = [
    "BadEdgeContext",
    "F_LOCAL_KINDS",
    "FULL_CATALOG",
    "Frame",
    "ProcedureReport",
    "RepairMove",
    "analyze_bad_edge",
    "check_thm22_conditions",
    "color_active_neighborhood",
    "complete_greedy",
    "dominant_k_colors",
    "frame_bad_edge_count",
    "frame_bad_edges",
    "non_dominant_k_colors",
    "repair_to_proper",
    "theorem_2_1_procedure",
    "theorem_2_2_procedure",
    "theorem_2_3_procedure",
    "theorem_3_1_procedure",
    "try_remove_bad_edge",
    "ux_coloring",
]
