"""
The unique order-invariant measure on the ladder, with values in Q(sqrt 5)
"""
from causets.exact import PHI, Surd5
from causets.families.ladder import LadderCauset, ladder_causet, ladder_stem_type
from causets.measures.base import Grade, OIMeasure


def ladder_value(taken: frozenset) -> Surd5:
    """
    phi^k on the prefix Z_k and phi^(k+1) on W_k
    """
    kind, size = ladder_stem_type(taken)
    return PHI ** (size + (kind == 'W'))


class LadderMeasure(OIMeasure):
    """
    Every ordering of a stem gets the same value, so prob only looks at the
    stem's shape
    """

    def __init__(self, support: LadderCauset = None):
        super().__init__(support or ladder_causet(), 'ladder', Grade.EXACT_QUADRATIC)

    @property
    def one(self):
        return Surd5(1)

    @property
    def zero(self):
        return Surd5(0)

    def _prob(self, seq, taken):
        return ladder_value(taken)

    def _weight(self, seq, taken, x):
        return ladder_value(taken | {x}) / ladder_value(taken)

    def appearance(self, b):
        self.support.check_element(b)
        return Surd5(1)


def ladder_measure() -> LadderMeasure:
    return LadderMeasure()
