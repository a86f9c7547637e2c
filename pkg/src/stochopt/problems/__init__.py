from .binpacking import (
    BinPackingInstance,
    brute_force_packing,
    first_fit_decreasing,
    packing_cost,
)
from .continuous import OBJECTIVES, ContinuousLandscape, landscape_value
from .tabletop import CUBE_COSTS, TabletopInstance, cube_fixture, cube_state
from .tsp import (
    TspInstance,
    brute_force_tour,
    tour_length,
    two_opt,
    two_route_instance,
)

__all__ = [
    "BinPackingInstance",
    "ContinuousLandscape",
    "CUBE_COSTS",
    "OBJECTIVES",
    "TabletopInstance",
    "TspInstance",
    "brute_force_packing",
    "brute_force_tour",
    "cube_fixture",
    "cube_state",
    "first_fit_decreasing",
    "landscape_value",
    "packing_cost",
    "tour_length",
    "two_opt",
    "two_route_instance",
]
