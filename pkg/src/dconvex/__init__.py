"""dconvex: exact recognizers and transformations for discrete convexity
classes of finite sets and functions on the integer lattice."""

from .classes import (
    ClassLabel,
    Verdict,
    Witness,
    argmin_perturbed,
    check,
    check_fn,
    check_set,
    multimodular_polyhedral_check,
    verify_witness,
)
from .core import (
    EmptyResultError,
    LatticeFn,
    LatticeSet,
    LiftedInputError,
    Window,
    cube,
    difference_transform,
    indicator_fn,
    join_meet,
    midpoint_round,
    prefix_transform,
    restrict_to_window,
    supports,
)
from .hull import in_local_hull, local_extension_value, neighborhood
from .network import Arc, ArcCost, Network, boundary, induce_fn, transform_set
from .ops import (
    PartitionSpec,
    SplitSpec,
    aggregate_fn,
    aggregate_set,
    convolution_fn,
    direct_sum_fn,
    direct_sum_set,
    minkowski_sum_set,
    split_fn,
    split_set,
)
from .rationals import INF, rat

__all__ = [
    "INF",
    "Arc",
    "ArcCost",
    "ClassLabel",
    "EmptyResultError",
    "LatticeFn",
    "LatticeSet",
    "LiftedInputError",
    "Network",
    "PartitionSpec",
    "SplitSpec",
    "Verdict",
    "Window",
    "Witness",
    "aggregate_fn",
    "aggregate_set",
    "argmin_perturbed",
    "boundary",
    "check",
    "check_fn",
    "check_set",
    "convolution_fn",
    "cube",
    "difference_transform",
    "direct_sum_fn",
    "direct_sum_set",
    "in_local_hull",
    "indicator_fn",
    "induce_fn",
    "join_meet",
    "local_extension_value",
    "midpoint_round",
    "minkowski_sum_set",
    "multimodular_polyhedral_check",
    "neighborhood",
    "prefix_transform",
    "rat",
    "restrict_to_window",
    "split_fn",
    "split_set",
    "supports",
    "transform_set",
    "verify_witness",
]
