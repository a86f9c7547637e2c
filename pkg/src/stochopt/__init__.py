"""stochopt: stochastic search and optimization toolkit.

Minimization-only problems (tours, packings, box-bounded landscapes,
small state graphs) paired with the classic stochastic searchers: random
search, hill-climbing in first-accept and steepest flavors, simulated
annealing with optional rescaled acceptance, attribute-based tabu
search, a binary Hopfield network for tours, particle swarms, and an
ant system.  Every run is driven by an evaluation budget and a seed and
returns a deterministic RunRecord; the `effort` module turns record
ensembles into success probabilities and restart-effort estimates.
"""

from .aco import (
    AcoConfig,
    AntState,
    PheromoneMatrix,
    aco_run,
    choose_next_city,
    edge_desirability,
    global_update,
    local_update,
)
from .annealing import (
    CoolingSchedule,
    calibrate_t0,
    metropolis_accept,
    next_temperature,
    rescaled_delta,
    simulated_annealing,
)
from .core import (
    Budget,
    BudgetExhaustedError,
    EncodingMismatchError,
    Move,
    NoNeighborError,
    OptimizationError,
    ParseError,
    Problem,
    Run,
    RunRecord,
    UnsupportedOperationError,
    ValidationError,
    seeded_rng,
    split_streams,
    success_time,
)
from .cli import (
    ExperimentConfig,
    ResultTable,
    emit_plot_data,
    format_duration,
    load_instance,
    main,
    parse_binpacking_file,
    parse_tsp_file,
    run_experiment,
    success_threshold,
)
from .effort import (
    ComparisonReport,
    ComplexityClass,
    EffortUndefinedError,
    EnsembleStats,
    computational_effort,
    cumulative_success,
    effort_curve,
    nfl_comparison,
    runtime_projection,
)
from .hopfield import (
    HopfieldNet,
    TankParams,
    async_step,
    build_weights,
    constraint_energy,
    cost_energy,
    decode_tour,
    hopfield_solve,
    is_fixed_point,
    network_energy,
)
from .local_search import (
    hill_climb_first_accept,
    hill_climb_steepest,
    random_search,
)
from .problems import (
    CUBE_COSTS,
    BinPackingInstance,
    ContinuousLandscape,
    TabletopInstance,
    TspInstance,
    brute_force_packing,
    brute_force_tour,
    cube_fixture,
    cube_state,
    first_fit_decreasing,
    landscape_value,
    packing_cost,
    tour_length,
    two_opt,
    two_route_instance,
)
from .swarm import GlobalBest, Particle, SwarmConfig, pso_run, step_swarm, update_velocity
from .tabu import TabuConfig, TabuList, SearchMemory, select_best_admissible, tabu_search

__version__ = "0.1.0"

__all__ = [
    "AcoConfig",
    "AntState",
    "BinPackingInstance",
    "Budget",
    "BudgetExhaustedError",
    "CUBE_COSTS",
    "ComparisonReport",
    "ComplexityClass",
    "ContinuousLandscape",
    "CoolingSchedule",
    "EffortUndefinedError",
    "EncodingMismatchError",
    "EnsembleStats",
    "ExperimentConfig",
    "GlobalBest",
    "HopfieldNet",
    "Move",
    "NoNeighborError",
    "OptimizationError",
    "ParseError",
    "Particle",
    "PheromoneMatrix",
    "Problem",
    "ResultTable",
    "Run",
    "RunRecord",
    "SearchMemory",
    "SwarmConfig",
    "TabletopInstance",
    "TabuConfig",
    "TabuList",
    "TankParams",
    "TspInstance",
    "UnsupportedOperationError",
    "ValidationError",
    "aco_run",
    "async_step",
    "brute_force_packing",
    "brute_force_tour",
    "build_weights",
    "calibrate_t0",
    "choose_next_city",
    "computational_effort",
    "constraint_energy",
    "cost_energy",
    "cube_fixture",
    "cube_state",
    "cumulative_success",
    "decode_tour",
    "edge_desirability",
    "effort_curve",
    "emit_plot_data",
    "first_fit_decreasing",
    "format_duration",
    "global_update",
    "hill_climb_first_accept",
    "hill_climb_steepest",
    "hopfield_solve",
    "is_fixed_point",
    "landscape_value",
    "load_instance",
    "local_update",
    "main",
    "metropolis_accept",
    "network_energy",
    "next_temperature",
    "nfl_comparison",
    "packing_cost",
    "parse_binpacking_file",
    "parse_tsp_file",
    "pso_run",
    "random_search",
    "rescaled_delta",
    "run_experiment",
    "runtime_projection",
    "seeded_rng",
    "select_best_admissible",
    "simulated_annealing",
    "split_streams",
    "step_swarm",
    "success_threshold",
    "success_time",
    "tabu_search",
    "tour_length",
    "two_opt",
    "two_route_instance",
    "update_velocity",
    "__version__",
]
