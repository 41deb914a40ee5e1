"""
The unique order-invariant measure on a linear sum of finite posets: each
summand is filled in a uniformly random linear extension before the next
one starts
"""
from fractions import Fraction

from causets.families.linear_sum import LinearSumCauset
from causets.measures.base import Grade, OIMeasure


class LinearSumMeasure(OIMeasure):
    """
    :param support: the linear sum
    """

    def __init__(self, support: LinearSumCauset):
        if not isinstance(support, LinearSumCauset):
            raise TypeError(f'Linear-sum measures need a LinearSumCauset, got {type(support)}')
        super().__init__(support, 'linear-sum', Grade.EXACT_RATIONAL)

    def _weight(self, seq, taken, x):
        index, local = self.support.current(taken)
        where, y = self.support.locate(x)
        if where != index:
            return self.zero
        poset = self.support.summand(index)
        mask = poset.mask(local)
        return Fraction(poset.extensions_from(mask | poset.mask((y,))),
                        poset.extensions_from(mask))

    def _prob(self, seq, taken):
        index, local = self.support.current(taken)
        value = Fraction(1)
        for done in range(index):
            value /= self.support.summand(done).extensions_from(0)
        poset = self.support.summand(index)
        return value * Fraction(poset.extensions_from(poset.mask(local)),
                                poset.extensions_from(0))

    def appearance(self, b):
        self.support.check_element(b)
        return Fraction(1)


def linear_sum_measure(support: LinearSumCauset) -> LinearSumMeasure:
    return LinearSumMeasure(support)
