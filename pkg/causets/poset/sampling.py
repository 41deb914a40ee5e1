"""
Uniform sampling and brute-force enumeration of linear extensions
"""
import logging

from causets.consts import DEFAULT_ENUMERATION_CAP, DEFAULT_STATE_BUDGET
from causets.exceptions import CapExceeded
from causets.poset.finite import FinitePoset
from causets.poset.lattice import iter_bits
from causets.seeding import make_rng, randbelow

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def sample_uniform_extension(p: FinitePoset, seed,
                             budget: int = DEFAULT_STATE_BUDGET) -> tuple:
    """
    Draws a linear extension exactly uniformly: the next element is chosen
    among the available ones, in id order, with weight equal to the number of
    completions after choosing it
    :param p: finite poset
    :param seed: int seed or numpy Generator
    :param budget: maximum number of down-set states
    :return: tuple of all element ids
    """
    rng = make_rng(seed)
    lattice = p.lattice(budget)
    mask, seq = 0, []
    for _ in range(p.n):
        target = randbelow(rng, lattice.completions(mask))
        for b in iter_bits(p.available(mask)):
            weight = lattice.completions(mask | (1 << b))
            if target < weight:
                mask |= 1 << b
                seq.append(p.elements[b])
                break
            target -= weight
    return tuple(seq)


def enumerate_extensions(p: FinitePoset, cap: int = DEFAULT_ENUMERATION_CAP,
                         budget: int = DEFAULT_STATE_BUDGET) -> list:
    """
    Every linear extension exactly once, in lexicographic id order
    :param p: finite poset
    :param cap: refuse posets with more than this many extensions
    :return: list of tuples
    """
    count = p.extensions_from(0, budget)
    if count > cap:
        raise CapExceeded(count, cap)
    results = []
    # iterative depth-first search; each frame is (mask, sequence, pending)
    stack = [(0, (), list(iter_bits(p.available(0)))[::-1])]
    while stack:
        mask, seq, pending = stack[-1]
        if not pending:
            stack.pop()
            if len(seq) == p.n:
                results.append(tuple(p.elements[i] for i in seq))
            continue
        b = pending.pop()
        new_mask = mask | (1 << b)
        stack.append((new_mask, seq + (b,),
                      list(iter_bits(p.available(new_mask)))[::-1]))
    logger.debug(f'Enumerated {len(results)} linear extensions')
    return results
