"""
Order-invariant measures, their negative controls and the limits of uniform
measures along exhaustions
"""
from causets.measures.base import Grade, OIMeasure, Stepper, Transition
from causets.measures.ladder import LadderMeasure, ladder_measure
from causets.measures.flow import (FlowMeasure, FlowSpec, check_flow, flow_measure,
                                   flow_identity_residual, mu_q)
from causets.measures.urn import UrnMeasure, beta_ratio, two_chain_nu, urn_measure
from causets.measures.mixture import MixtureMeasure, mixture_measure
from causets.measures.linear_sum import LinearSumMeasure, linear_sum_measure
from causets.measures.tree import (TreeMeasure, TreeMeasureResult,
                                   tree_marking_sampler, tree_measure)
from causets.measures.grid import (grid_finite_nu, hook_count, skew_count,
                                   young_diagrams)
from causets.measures.limit import (Convergence, ConvergenceReport,
                                    limit_measure_eval)
from causets.measures.derived import (AppearanceSplit, DerivedStemMeasure,
                                      appearance_probability,
                                      condition_on_appearance,
                                      derived_stem_measure)
from causets.measures.controls import (PerturbedMeasure, PointMassMeasure,
                                       StickyKernelMeasure, perturbed_measure,
                                       point_mass_measure, sticky_kernel_measure)
from causets.measures.presets import MEASURES
