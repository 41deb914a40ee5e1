"""
Infinite causal sets presented through lazily evaluated oracles
"""
from causets.families.oracle import (CausetOracle, DeletedStem, FiniteCauset,
                                     MinimalElements, delete_stem)
from causets.families.ladder import LadderCauset, ladder_causet, ladder_stem_type
from causets.families.linear_sum import (LinearSumCauset, linear_sum_causet,
                                         summand_sizes)
from causets.families.forest import (ChainPlusPoint, CountableAntichain,
                                     DisjointChains, ForestCauset,
                                     binary_tree_causet, comb_causet,
                                     disjoint_chains_causet, forest_causet)
from causets.families.tree import DownTree, TreeSpec, down_tree_causet
from causets.families.grid import GridCauset, cell_id, cell_of, grid_causet
from causets.families.oscillating import OscillatingCauset, oscillating_causet
from causets.families.crossed import CrossedChains, crossed_chains_causet
from causets.families.poisson import poisson_order_causet
from causets.families.exhaustion import (EXHAUSTIONS, exhaustion_stem,
                                         finite_restriction)
from causets.families.stems import orderings, ordered_stems, stems_of_size
from causets.families.presets import FAMILIES, TREES
