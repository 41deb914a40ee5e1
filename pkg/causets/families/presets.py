"""
Named family and tree presets for configs and the command line
"""
import math

from causets.consts import DEFAULT_CHAIN_CAP
from causets.exceptions import UsageError
from causets.families.crossed import crossed_chains_causet
from causets.families.forest import (ChainPlusPoint, CountableAntichain,
                                     binary_tree_causet, comb_causet,
                                     disjoint_chains_causet)
from causets.families.grid import grid_causet
from causets.families.ladder import ladder_causet
from causets.families.linear_sum import linear_sum_causet, summand_sizes
from causets.families.oscillating import (double_exponential, oscillating_causet,
                                          powers_of_two)
from causets.families.poisson import poisson_order_causet
from causets.families.tree import (bare_chain_tree, cherry_tree, down_tree_causet,
                                   every_level_tree, pendant_tree, sparse_tree)
from causets.registry import PresetRegistry

TREES = PresetRegistry('tree')
TREES.register('chain', bare_chain_tree, 'the bare reference chain')
TREES.register('pendant-x1', lambda: pendant_tree((1,)), 'one leaf below x1')
TREES.register('pendants-x1-x2', lambda: pendant_tree((1, 2)),
               'one leaf below x1 and one below x2')
TREES.register('cherry-x1', cherry_tree, 'a two-leaf cherry below x1')
TREES.register('pendant-every-level', every_level_tree,
               'a leaf below every x_i; no measure exists')
TREES.register('sparse-pendants', sparse_tree, 'leaves below x1, x2, x4, x8, ...')

FAMILIES = PresetRegistry('family')


def parse_count(value):
    """
    An int, or math.inf for "inf"
    """
    if value in ('inf', math.inf):
        return math.inf
    try:
        return int(value)
    except (TypeError, ValueError):
        raise UsageError(f'Expected an integer or "inf", got {value!r}') from None


def parse_sizes(value) -> tuple:
    if isinstance(value, str):
        value = value.split(',')
    try:
        sizes = tuple(int(v) for v in value)
    except (TypeError, ValueError):
        raise UsageError(f'Summand sizes must be integers, got {value!r}') from None
    if not sizes or min(sizes) < 1:
        raise UsageError(f'Summand sizes must be positive, got {sizes}')
    return sizes


@FAMILIES.preset('ladder', 'a_j > a_i when j > i + 1')
def ladder_family():
    return ladder_causet()


@FAMILIES.preset('chains', 'k disjoint infinite chains (k may be inf)', k=2)
def chains_family(k):
    return disjoint_chains_causet(parse_count(k))


@FAMILIES.preset('single-chain', 'one infinite chain')
def single_chain_family():
    return disjoint_chains_causet(1)


@FAMILIES.preset('linear-sum', 'stacked antichains of the given sizes, repeated',
                 sizes='2,2')
def linear_sum_family(sizes):
    sizes = parse_sizes(sizes)
    return linear_sum_causet(summand_sizes(sizes))


@FAMILIES.preset('binary', 'the upward-branching binary tree')
def binary_family():
    return binary_tree_causet()


@FAMILIES.preset('comb', 'a spine with an infinite tooth above each element')
def comb_family():
    return comb_causet()


@FAMILIES.preset('antichain', 'countably many incomparable elements')
def antichain_family():
    return CountableAntichain()


@FAMILIES.preset('chain-point', 'an infinite chain and one isolated element')
def chain_point_family():
    return ChainPlusPoint()


@FAMILIES.preset('tree', 'a downward-branching tree preset', shape='pendant-x1')
def tree_family(shape):
    return down_tree_causet(TREES.create(shape))


@FAMILIES.preset('grid', 'N x N with the product order')
def grid_family():
    return grid_causet()


@FAMILIES.preset('oscillating', 'width-two causet whose uniform measures oscillate',
                 growth='powers-of-two', cap=DEFAULT_CHAIN_CAP)
def oscillating_family(growth, cap):
    cap = parse_count(cap)
    if growth == 'powers-of-two':
        return oscillating_causet(lambda n: min(powers_of_two(n), cap),
                                  label=f'powers-of-two-{cap}')
    if growth == 'double-exponential':
        return oscillating_causet(lambda n: double_exponential(n, cap),
                                  label=f'double-exponential-{cap}')
    raise UsageError(f'Unknown growth "{growth}"; use powers-of-two or ' +
                     'double-exponential')


@FAMILIES.preset('crossed', 'two chains with c_i > b_j for j < 2^i')
def crossed_family():
    return crossed_chains_causet()


@FAMILIES.preset('poisson', 'coordinate order of a Poisson sample in a square',
                 seed=0, intensity=10.0, horizon=1.0)
def poisson_family(seed, intensity, horizon):
    return poisson_order_causet(int(seed), float(intensity), float(horizon))
