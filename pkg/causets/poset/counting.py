"""
Exact counting on finite posets: linear extensions, prefix-conditional
counts, uniform stem probabilities and rank distributions
"""
import logging
from collections.abc import Sequence
from fractions import Fraction

from causets.consts import DEFAULT_STATE_BUDGET
from causets.poset.finite import FinitePoset
from causets.poset.lattice import iter_bits

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def count_linear_extensions(p: FinitePoset,
                            budget: int = DEFAULT_STATE_BUDGET) -> int:
    """
    e(p), the number of linear extensions
    :param p: finite poset
    :param budget: maximum number of down-set states
    :return: count, at least 1
    """
    count = p.extensions_from(0, budget)
    logger.debug(f'e(P) = {count} for a poset of {p.n} elements')
    return count


def count_with_prefix(p: FinitePoset, s: Sequence,
                      budget: int = DEFAULT_STATE_BUDGET) -> int:
    """
    Number of linear extensions of p that start with the ordered stem s,
    which is e(p minus the elements of s)
    :param p: finite poset
    :param s: ordered stem of p
    :param budget: maximum number of down-set states
    :return: count
    """
    return p.extensions_from(p.check_stem(s), budget)


def nu_uniform(p: FinitePoset, s: Sequence,
               budget: int = DEFAULT_STATE_BUDGET) -> Fraction:
    """
    Probability that a uniformly random linear extension of p starts with s
    """
    return Fraction(count_with_prefix(p, s, budget),
                    count_linear_extensions(p, budget))


def rank_distribution(p: FinitePoset, x, budget: int = DEFAULT_STATE_BUDGET) -> list:
    """
    r_i(x) for i = 1..n: the probability that x sits at position i of a
    uniformly random linear extension. A down-set D of size i-1 contributes
    (extensions of D) * (completions of D + x) when x is addable to D
    :param p: finite poset
    :param x: element of p
    :param budget: maximum number of down-set states
    :return: list of n Fractions summing to 1
    """
    bit = 1 << p.position(x)
    lattice = p.lattice(budget)
    total = lattice.total
    ranks = []
    for layer in lattice.layers[:-1]:
        hits = sum(lattice.forward[mask] * lattice.completions(mask | bit)
                   for mask, avail in layer.items() if avail & bit)
        ranks.append(Fraction(hits, total))
    return ranks


def first_element_law(p: FinitePoset, budget: int = DEFAULT_STATE_BUDGET) -> dict:
    """
    Probability of each minimal element being first in a uniform extension
    :return: dict id -> Fraction
    """
    total = count_linear_extensions(p, budget)
    return {p.elements[i]: Fraction(p.extensions_from(1 << i, budget), total)
            for i in iter_bits(p.available(0))}
