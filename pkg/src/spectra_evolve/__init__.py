"""Evolve fixed-size connected graphs toward a target spectral density.

The library represents graphs as immutable edge sets, scores them by the L1
distance between smoothed normalized-Laplacian spectral densities, and
searches with a generational loop whose mutation and crossover are guided by
algebraic connectivity and Fiedler-vector bisections.  Structural diversity
of the results is quantified with non-spectral metrics and a gap-product
contribution measure.
"""

from .engine import (
    EvolutionConfig,
    RunRecord,
    evaluate_fitness,
    run_evolution,
    tournament_select,
)
from .generators import (
    InitSpec,
    TargetSpec,
    make_barabasi_albert,
    make_circulant,
    make_erdos_renyi,
    make_initial_population,
    make_random_regular,
    make_star,
    make_watts_strogatz,
    spectral_fingerprint,
)
from .graph import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    MissingEdgeError,
    SelfLoopError,
    read_edge_list,
    write_edge_list,
)
from .metrics import (
    DiversityReport,
    MetricSample,
    average_betweenness,
    average_path_length,
    betweenness_centrality,
    diversity_contributions,
    global_clustering,
    metric_sample,
)
from .operators import (
    CrossoverStats,
    CrossoverVariant,
    MutationParams,
    apply_crossover,
    basic_crossover,
    degree_biased_vertex,
    mutate,
    repair_connectivity,
    spectral_crossover_1,
    spectral_crossover_2,
)
from .spectral import (
    Bisection,
    DensityGrid,
    Spectrum,
    algebraic_connectivity,
    density,
    density_values,
    eigen_spectrum,
    fiedler_bisection,
    normalized_laplacian,
    spectral_distance,
    write_density_csv,
)

__version__ = "0.1.0"

__all__ = [
    "Bisection",
    "CrossoverStats",
    "CrossoverVariant",
    "DensityGrid",
    "DiversityReport",
    "DuplicateEdgeError",
    "EvolutionConfig",
    "Graph",
    "GraphError",
    "InitSpec",
    "MetricSample",
    "MissingEdgeError",
    "MutationParams",
    "RunRecord",
    "SelfLoopError",
    "Spectrum",
    "TargetSpec",
    "algebraic_connectivity",
    "apply_crossover",
    "average_betweenness",
    "average_path_length",
    "basic_crossover",
    "betweenness_centrality",
    "degree_biased_vertex",
    "density",
    "density_values",
    "diversity_contributions",
    "eigen_spectrum",
    "evaluate_fitness",
    "fiedler_bisection",
    "global_clustering",
    "make_barabasi_albert",
    "make_circulant",
    "make_erdos_renyi",
    "make_initial_population",
    "make_random_regular",
    "make_star",
    "make_watts_strogatz",
    "metric_sample",
    "mutate",
    "normalized_laplacian",
    "read_edge_list",
    "repair_connectivity",
    "run_evolution",
    "spectral_crossover_1",
    "spectral_crossover_2",
    "spectral_distance",
    "spectral_fingerprint",
    "tournament_select",
    "write_density_csv",
    "write_edge_list",
]
