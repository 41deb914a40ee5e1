"""
Enumeration of stems and ordered stems of a causet, within budgets
"""
import logging

from causets.consts import (DEFAULT_CHECK_BRANCH, DEFAULT_ENUMERATION_CAP,
                            DEFAULT_MINIMAL_BUDGET, DEFAULT_STEM_BUDGET)
from causets.exceptions import ResourceLimit
from causets.families.oracle import CausetOracle
from causets.poset.sampling import enumerate_extensions

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def stems_of_size(o: CausetOracle, k: int, budget: int = DEFAULT_STEM_BUDGET,
                  minimal_budget: int = DEFAULT_MINIMAL_BUDGET) -> list:
    """
    Every stem (finite down-set) with k elements, sorted
    :param o: oracle whose minimal-element lists are exhaustive along the way
    :param k: stem size
    :param budget: maximum number of stems held in one layer
    :param minimal_budget: budget passed to minimal-element queries
    :return: list of frozensets
    """
    layer = {frozenset()}
    for size in range(k):
        grown = set()
        for stem in layer:
            minimal = o.extensions_first(stem, minimal_budget)
            if not minimal.exhaustive:
                raise ResourceLimit(minimal_budget, 'minimal elements of an ' +
                                    'infinite complement')
            grown.update(stem | {x} for x in minimal.elements)
            if len(grown) > budget:
                raise ResourceLimit(budget, 'stems')
        layer = grown
        logger.debug(f'{len(layer)} stems of size {size + 1}')
    return sorted(layer, key=sorted)


def ordered_stems(o: CausetOracle, depth: int, branch: int = DEFAULT_CHECK_BRANCH,
                  budget: int = DEFAULT_STEM_BUDGET) -> list:
    """
    Ordered stems of length at most depth, shortest first, in lexicographic
    id order. Infinite minimal-element lists are cut to their first branch
    entries
    :param o: oracle
    :param depth: maximum stem length
    :param branch: entries kept from a non-exhaustive list
    :param budget: maximum number of stems returned
    :return: list of tuples, starting with the empty stem
    """
    found = [()]
    frontier = [()]
    for _ in range(depth):
        grown = []
        for seq in frontier:
            minimal = o.extensions_first(frozenset(seq), DEFAULT_MINIMAL_BUDGET)
            elements = minimal.elements
            if not minimal.exhaustive:
                elements = elements[:branch]
            grown.extend(seq + (x,) for x in elements)
            if len(found) + len(grown) > budget:
                raise ResourceLimit(budget, 'ordered stems')
        found.extend(grown)
        frontier = grown
    return found


def orderings(o: CausetOracle, ids, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """
    Every ordered stem with the given underlying set
    :param o: oracle
    :param ids: a stem of o
    :param cap: maximum number of orderings
    :return: list of tuples
    """
    ids = o.check_down_set(ids)
    return enumerate_extensions(o.restrict(ids), cap)
