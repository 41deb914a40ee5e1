"""
Dynamic programming over the lattice of down-sets of a finite poset. Posets
are handled through position bitmasks: bit i of a mask stands for the i-th
element of the poset in sorted id order
"""
import logging

from causets.consts import DEFAULT_STATE_BUDGET
from causets.exceptions import ResourceLimit

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def iter_bits(mask: int):
    """
    Positions of the set bits of mask, lowest first
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def available(below, mask: int) -> int:
    """
    Mask of the minimal elements of the complement of the down-set mask
    :param below: per-position masks of strictly smaller elements
    :param mask: down-set mask
    :return: mask of positions that can be added next
    """
    result = 0
    for i, lower in enumerate(below):
        if not (mask >> i) & 1 and not lower & ~mask:
            result |= 1 << i
    return result


def frontier(above, mask: int) -> tuple:
    """
    Maximal elements of the down-set mask, the canonical key of the down-set
    """
    return tuple(i for i in iter_bits(mask) if not above[i] & mask)


def count_paths(below, above, upper, start: int = 0,
                budget: int = DEFAULT_STATE_BUDGET) -> int:
    """
    Number of linear extensions of the poset with the down-set start removed.
    States are keyed by their frontier and processed one layer per added
    element, so only two layers are ever held
    :param below: per-position masks of strictly smaller elements
    :param above: per-position masks of strictly larger elements
    :param upper: per-position tuples of upper cover positions
    :param start: down-set mask already placed
    :param budget: maximum number of states visited
    :return: extension count
    """
    n = len(below)
    remaining = n - bin(start).count('1')
    if remaining == 0:
        return 1
    layer = {frontier(above, start): (start, available(below, start), 1)}
    visited = 1
    for _ in range(remaining):
        following = {}
        for key, (mask, avail, count) in layer.items():
            for b in iter_bits(avail):
                lower = below[b]
                new_key = tuple(sorted([f for f in key if not (lower >> f) & 1] + [b]))
                state = following.get(new_key)
                if state is None:
                    new_mask = mask | (1 << b)
                    new_avail = avail & ~(1 << b)
                    for y in upper[b]:
                        if not below[y] & ~new_mask:
                            new_avail |= 1 << y
                    following[new_key] = (new_mask, new_avail, count)
                    visited += 1
                    if visited > budget:
                        raise ResourceLimit(budget)
                else:
                    following[new_key] = (state[0], state[1], state[2] + count)
        layer = following
    logger.debug(f'Counted {remaining} elements through {visited} states')
    return sum(count for _, _, count in layer.values())


class DownSetLattice:
    """
    The full lattice of down-sets of a finite poset, with the number of ways
    to reach each down-set from the empty set (forward) and to complete it
    to the whole poset (backward). Used where every down-set is needed at
    once: rank distributions and exact uniform sampling

    :param below: per-position masks of strictly smaller elements
    :param upper: per-position tuples of upper cover positions
    :param budget: maximum number of down-sets
    """
    def __init__(self, below, upper, budget: int = DEFAULT_STATE_BUDGET):
        self.n = len(below)
        self.full = (1 << self.n) - 1
        self.layers = [{0: available(below, 0)}]
        self.forward = {0: 1}
        visited = 1
        for _ in range(self.n):
            following = {}
            for mask, avail in self.layers[-1].items():
                count = self.forward[mask]
                for b in iter_bits(avail):
                    new_mask = mask | (1 << b)
                    if new_mask not in following:
                        new_avail = avail & ~(1 << b)
                        for y in upper[b]:
                            if not below[y] & ~new_mask:
                                new_avail |= 1 << y
                        following[new_mask] = new_avail
                        self.forward[new_mask] = 0
                        visited += 1
                        if visited > budget:
                            raise ResourceLimit(budget)
                    self.forward[new_mask] += count
            self.layers.append(following)
        self.backward = {self.full: 1}
        for layer in reversed(self.layers[:-1]):
            for mask, avail in layer.items():
                self.backward[mask] = sum(self.backward[mask | (1 << b)]
                                          for b in iter_bits(avail))
        logger.debug(f'Built down-set lattice with {visited} states')

    @property
    def size(self) -> int:
        return len(self.forward)

    @property
    def total(self) -> int:
        return self.backward[0]

    def completions(self, mask: int) -> int:
        return self.backward[mask]
