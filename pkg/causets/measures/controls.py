"""
Measures that are deliberately not order-invariant or not consistent, used
as negative controls for the checkers, and point masses on single natural
extensions
"""
from collections.abc import Callable
from fractions import Fraction

from causets.families.forest import DisjointChains
from causets.families.oracle import CausetOracle
from causets.measures.base import OIMeasure


class PointMassMeasure(OIMeasure):
    """
    All mass on one natural extension step(0), step(1), ...

    :param support: oracle
    :param step: callable i -> id of the i-th element, from 0
    :param members: optional predicate telling whether an element ever
        occurs; appearance is unknown without it
    :param name: display name
    """

    def __init__(self, support: CausetOracle, step: Callable,
                 members: Callable = None, name: str = 'point-mass'):
        super().__init__(support, name)
        self.step = step
        self.members = members

    def _is_prefix(self, seq) -> bool:
        return all(x == self.step(i) for i, x in enumerate(seq))

    def _prob(self, seq, taken):
        return self.one if self._is_prefix(seq) else self.zero

    def _weight(self, seq, taken, x):
        return self.one if self._is_prefix(seq + (x,)) else self.zero

    def appearance(self, b):
        if self.members is None:
            return None
        return self.one if self.members(b) else self.zero


def point_mass_measure(support: CausetOracle, step: Callable,
                       members: Callable = None) -> PointMassMeasure:
    return PointMassMeasure(support, step, members)


class PerturbedMeasure(OIMeasure):
    """
    mu with delta added to the probability of one ordered stem; transitions
    stay those of mu

    :param mu: the measure to break
    :param stem: ordered stem whose probability is shifted
    :param delta: the shift
    """

    def __init__(self, mu: OIMeasure, stem, delta=Fraction(1, 100)):
        super().__init__(mu.support, f'perturbed-{mu.name}', mu.grade)
        self.mu = mu
        self.stem = tuple(stem)
        mu.support.check_stem(self.stem)
        self.delta = delta

    def _prob(self, seq, taken):
        value = self.mu._prob(seq, taken)
        return value + self.delta if seq == self.stem else value

    def _weight(self, seq, taken, x):
        return self.mu._weight(seq, taken, x)

    def _transition(self, seq, taken, budget):
        return self.mu._transition(seq, taken, budget)


def perturbed_measure(mu: OIMeasure, stem, delta=Fraction(1, 100)) -> PerturbedMeasure:
    return PerturbedMeasure(mu, stem, delta)


class StickyKernelMeasure(OIMeasure):
    """
    Two chains; the first element is B or C with probability 1/2 and every
    later element stays on the chain of the previous one with probability
    q_same. The law of the next element depends on the order of the stem

    :param q_same: probability of repeating the previous chain
    """

    def __init__(self, q_same=Fraction(3, 4)):
        super().__init__(DisjointChains(2), f'sticky({q_same})')
        self.q_same = Fraction(q_same)

    def _weight(self, seq, taken, x):
        if not seq:
            return Fraction(1, 2)
        last, _ = self.support.locate(seq[-1])
        chain, _ = self.support.locate(x)
        return self.q_same if chain == last else 1 - self.q_same


def sticky_kernel_measure(q_same=Fraction(3, 4)) -> StickyKernelMeasure:
    return StickyKernelMeasure(q_same)
