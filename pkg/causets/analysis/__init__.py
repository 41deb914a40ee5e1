"""
Checkers, simulation and Monte-Carlo tests for causet measures
"""
from causets.analysis.report import CheckReport, Verdict, reported
from causets.analysis.trajectory import Trajectory, draw_next, simulate
from causets.analysis.checks import (absence_bound_check, check_kolmogorov,
                                     check_order_invariance, check_order_markov,
                                     check_rank_monotonicity,
                                     first_place_bound_check)
from causets.analysis.montecarlo import essentiality_test, estimate_event, nu_k
from causets.analysis.compactness import (compactness_witness, existence_criterion,
                                          incomparability_profile)
