"""Hard-core model toolkit: exact counting, tree thresholds, moment surfaces, certification, dynamics."""
from .graphs import Graph, blowup, generate_bipartite_regular, load_graph, save_graph
from .exact import (
    BivariateIndependencePolynomial,
    ClassMeasures,
    class_measures,
    exact_gibbs_distribution,
    independence_polynomial,
    partition_function,
)
from .tree import (
    CriticalPoints,
    contraction_factor,
    finite_tree_marginal,
    fixed_points,
    lambda_c,
    lambda_half,
    phi,
)
from .moments import OverlapPoint, eliminate_epsilon, f_gradient, hessian, phi1, phi2, phi2_gradient, region_classify
from .surfaces import phase_scan, phi1_gap, phi1_maximizer, verify_condition
from .glauber import ChainState, TrajectoryStats, bottleneck_ratio, glauber_step, run_chain

__all__ = [
    "Graph",
    "blowup",
    "generate_bipartite_regular",
    "load_graph",
    "save_graph",
    "BivariateIndependencePolynomial",
    "ClassMeasures",
    "class_measures",
    "exact_gibbs_distribution",
    "independence_polynomial",
    "partition_function",
    "CriticalPoints",
    "contraction_factor",
    "finite_tree_marginal",
    "fixed_points",
    "lambda_c",
    "lambda_half",
    "phi",
    "OverlapPoint",
    "eliminate_epsilon",
    "f_gradient",
    "hessian",
    "phi1",
    "phi2",
    "phi2_gradient",
    "region_classify",
    "phase_scan",
    "phi1_gap",
    "phi1_maximizer",
    "verify_condition",
    "ChainState",
    "TrajectoryStats",
    "bottleneck_ratio",
    "glauber_step",
    "run_chain",
]
