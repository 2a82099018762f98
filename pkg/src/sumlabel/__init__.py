"""Sum-distinguishing labelings of hypergraphs.

Exact minimum max-label solvers at desk scale, randomized and
deterministic labeling algorithms, exact sum-of-uniforms distribution
tools, and seeded instance generators, with a CLI front end.
"""

from .constructive import (DegreeBoundsReport, LeafStat, RepairResult, leaf_stat,
                           repair_labeler, s_star_bounds, tree_labeler)
from .errors import (BudgetExhausted, DimensionError, DualDegenerate, EmptyNeighborhood,
                     InfeasibleParams, OracleTooLarge, ParamsOutOfRange, ParseError,
                     ShapeError, SumLabelError, TooLarge, ValidationError)
from .exact import SolveResult, decide_labeling, exact_irr, exact_s, exact_s_star, oracle_enumerate
from .generators import (ExperimentConfig, ExperimentReport, GeneratedInstance,
                         LowerBoundParams, gen_runiform, lower_bound_instance,
                         lower_bound_params, run_experiment, sum_class_histogram)
from .hypergraph import (Graph, Hypergraph, Labeling, closed_sums, edge_sums,
                         is_distinguishing, is_vertex_sum_distinguishing,
                         power_of_two_labeling)
from .randomized import (PairClassification, PairData, QuadraticResult, TwoStepConfig,
                         TwoStepResult, classify_pairs, quadratic_random_labeling,
                         step_one, step_one_successful, two_step_labeling)
from .transforms import (closed_neighborhood_groups, closed_neighborhood_hypergraph, dual,
                         injective_reduction, open_neighborhood_hypergraph, split_embed)
from .uniform_sums import (MergeChecks, Pmf, binomial_tail_le_one, exact_collision_probability,
                           iter_sum_pmfs, merge_inequality_check, peak_probability_margin,
                           sum_pmf, window_probability)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted", "DegreeBoundsReport", "DimensionError", "DualDegenerate",
    "EmptyNeighborhood", "ExperimentConfig", "ExperimentReport", "GeneratedInstance",
    "Graph", "Hypergraph", "InfeasibleParams", "Labeling", "LeafStat", "LowerBoundParams",
    "MergeChecks", "OracleTooLarge", "PairClassification", "PairData", "ParamsOutOfRange",
    "ParseError", "Pmf", "QuadraticResult", "RepairResult", "ShapeError", "SolveResult",
    "SumLabelError", "TooLarge", "TwoStepConfig", "TwoStepResult", "ValidationError",
    "binomial_tail_le_one", "classify_pairs", "closed_neighborhood_groups",
    "closed_neighborhood_hypergraph", "closed_sums", "decide_labeling", "dual",
    "edge_sums", "exact_collision_probability", "exact_irr", "exact_s", "exact_s_star",
    "gen_runiform", "injective_reduction", "is_distinguishing",
    "is_vertex_sum_distinguishing", "iter_sum_pmfs", "leaf_stat", "lower_bound_instance",
    "lower_bound_params", "merge_inequality_check", "open_neighborhood_hypergraph",
    "oracle_enumerate", "peak_probability_margin", "power_of_two_labeling",
    "quadratic_random_labeling", "repair_labeler", "run_experiment", "s_star_bounds",
    "split_embed", "step_one", "step_one_successful", "sum_class_histogram", "sum_pmf",
    "tree_labeler", "two_step_labeling", "window_probability",
]
