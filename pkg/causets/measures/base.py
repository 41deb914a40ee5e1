"""
The measure interface: stem probabilities, transition laws and the
exactness grade every value carries
"""
import logging
from collections.abc import Iterable, Sequence
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from causets.consts import DEFAULT_MINIMAL_BUDGET, FLOAT_TOLERANCE
from causets.exact import exact_sum
from causets.exceptions import NotAnOrderedStem
from causets.families.oracle import CausetOracle

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class Grade(Enum):
    """
    How a measure's values are computed, from most to least exact
    """
    EXACT_RATIONAL = 'exact-rational'
    EXACT_QUADRATIC = 'exact-quadratic'
    FLOAT = 'float'
    MONTE_CARLO = 'monte-carlo'

    @property
    def exact(self) -> bool:
        return self in (Grade.EXACT_RATIONAL, Grade.EXACT_QUADRATIC)

    @property
    def tolerance(self) -> float:
        return 0 if self.exact else FLOAT_TOLERANCE

    @property
    def rank(self) -> int:
        return list(Grade).index(self)

    @classmethod
    def worst(cls, grades: Iterable):
        return max(grades, key=lambda g: g.rank, default=cls.EXACT_RATIONAL)


class Transition(NamedTuple):
    """
    The law of the next element after a stem. When exhaustive is False the
    listed weights leave out mass, at most tail (None when unknown)
    """
    elements: tuple
    weights: tuple
    exhaustive: bool
    tail: object = 0

    def weight_of(self, x):
        try:
            return self.weights[self.elements.index(x)]
        except ValueError:
            return None

    @property
    def listed(self):
        return exact_sum(self.weights)

    def items(self):
        return zip(self.elements, self.weights)


class OIMeasure:
    """
    A causet measure given by its stem probabilities prob(a_1...a_k) and
    transition laws. prob of the empty stem is 1 and prob(s.b) equals prob(s)
    times the transition weight of b after s

    Subclasses implement _weight, and may override _prob with a closed form
    or _transition when the listed elements are not the oracle's

    :param support: the CausetOracle the measure lives on
    :param name: display name
    :param grade: exactness grade of the values
    """

    def __init__(self, support: CausetOracle, name: str = 'measure',
                 grade: Grade = Grade.EXACT_RATIONAL):
        if not isinstance(support, CausetOracle):
            raise TypeError(f'Measure support must be a CausetOracle, got {type(support)}')
        self.support = support
        self.name = name
        self.grade = grade

    def __repr__(self):
        return f'{type(self).__name__}({self.name} on {self.support.family})'

    @property
    def one(self):
        return 1.0 if not self.grade.exact else Fraction(1)

    @property
    def zero(self):
        return 0.0 if not self.grade.exact else Fraction(0)

    @property
    def tolerance(self):
        """
        Largest discrepancy checks accept between values that should agree
        """
        return self.grade.tolerance

    def _weight(self, seq: tuple, taken: frozenset, x):
        raise NotImplementedError

    def _prob(self, seq: tuple, taken: frozenset):
        value = self.one
        for i, x in enumerate(seq):
            w = self._weight(seq[:i], frozenset(seq[:i]), x)
            if not w:
                return self.zero
            value = value * w
        return value

    def _transition(self, seq: tuple, taken: frozenset, budget: int) -> Transition:
        minimal = self.support.extensions_first(taken, budget)
        weights = tuple(self._weight(seq, taken, x) for x in minimal.elements)
        if minimal.exhaustive:
            return Transition(minimal.elements, weights, True, 0)
        return Transition(minimal.elements, weights, False, self._tail(seq, taken, weights))

    def _tail(self, seq: tuple, taken: frozenset, weights: tuple):
        """
        Bound on the mass left out of a truncated transition; the default
        trusts the weights to sum to 1 over all minimal elements
        """
        rest = self.one - exact_sum(weights)
        return max(rest, self.zero)

    def prob(self, stem: Sequence):
        """
        mu(E(a_1...a_k))
        :param stem: ordered stem of the support
        :return: exact value for exact grades, float otherwise
        """
        seq = tuple(stem)
        taken = self.support.check_stem(seq)
        return self._prob(seq, taken)

    def transition(self, stem: Sequence = (),
                   budget: int = DEFAULT_MINIMAL_BUDGET) -> Transition:
        """
        Law of the element that follows the ordered stem
        :param stem: ordered stem of the support
        :param budget: maximum number of listed elements
        :return: Transition
        """
        seq = tuple(stem)
        taken = self.support.check_stem(seq)
        return self._transition(seq, taken, budget)

    def weight(self, stem: Sequence, x):
        """
        Transition weight of a single minimal element x after the stem
        """
        seq = tuple(stem)
        taken = self.support.check_stem(seq)
        if x in taken or not self.support.down(x) <= taken:
            raise NotAnOrderedStem(seq + (x,), len(seq))
        return self._weight(seq, taken, x)

    def appearance(self, b):
        """
        Probability that b is ever chosen, when known in closed form
        :return: value or None
        """
        return None

    def stepper(self):
        return Stepper(self)

    def describe(self) -> dict:
        return {'measure': self.name, 'family': self.support.family,
                'grade': self.grade.value}


class Stepper:
    """
    Incremental view of a growing stem, used by simulations. Measures whose
    transitions depend on a small summary of the stem override it
    """

    def __init__(self, measure: OIMeasure):
        self.measure = measure
        self.seq = []
        self.taken = set()

    def transition(self, budget: int = DEFAULT_MINIMAL_BUDGET) -> Transition:
        return self.measure._transition(tuple(self.seq), frozenset(self.taken), budget)

    def push(self, x):
        self.seq.append(x)
        self.taken.add(x)
