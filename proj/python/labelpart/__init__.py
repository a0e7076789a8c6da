from ._labelpart import (
    CostCounters,
    GaussianComponent2D,
    GaussianMixture2D,
    GridConfig,
    Interval,
    JoinMethod,
    PartitionLoopConfig,
    Rect,
    chi2_quantile_2dof,
    connected_components,
    generate_rects,
    gmbr_from_mixture,
    join,
    mbr_union,
    rect_intersects,
    select_label_partition,
    two_layer_join,
)

__all__ = [
    "CostCounters",
    "GaussianComponent2D",
    "GaussianMixture2D",
    "GridConfig",
    "Interval",
    "JoinMethod",
    "PartitionLoopConfig",
    "Rect",
    "chi2_quantile_2dof",
    "connected_components",
    "generate_rects",
    "gmbr_from_mixture",
    "join",
    "mbr_union",
    "rect_intersects",
    "select_label_partition",
    "two_layer_join",
]
