"""
Measures derived from another one: conditioning on an initial stem (which
lives on the causet with that stem deleted) and splitting by whether an
element ever appears
"""
import logging
from collections.abc import Sequence

from causets.consts import (DEFAULT_APPEARANCE_HORIZON, DEFAULT_ENUMERATION_CAP,
                            DEFAULT_STEM_BUDGET)
from causets.exact import exact_sum
from causets.exceptions import (InconclusiveAtHorizon, OrderDependentStem,
                                UndefinedConditioning, ZeroProbabilityStem)
from causets.families.oracle import delete_stem
from causets.families.stems import orderings, stems_of_size
from causets.measures.base import OIMeasure
from causets.measures.mixture import MixtureMeasure
from causets.poset.counting import count_linear_extensions

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class DerivedStemMeasure(OIMeasure):
    """
    mu conditioned on starting with the stem a, seen on P minus a:
    prob(b_1...b_k) = mu.prob(a b_1...b_k) / mu.prob(a)

    :param mu: the original measure
    :param a: ordered stem of mu's support with positive probability
    :param cap: maximum number of orderings of a compared
    """

    def __init__(self, mu: OIMeasure, a: Sequence, cap: int = DEFAULT_ENUMERATION_CAP):
        self.base = mu
        self.stem = tuple(a)
        removed = mu.support.check_stem(self.stem)
        self.base_prob = mu._prob(self.stem, removed)
        if not self.base_prob:
            raise ZeroProbabilityStem(mu.support.names(self.stem))
        for other in orderings(mu.support, removed, cap):
            if mu.grade.exact:
                differs = mu._prob(other, removed) != self.base_prob
            else:
                differs = abs(mu._prob(other, removed) - self.base_prob) > mu.grade.tolerance
            if differs:
                raise OrderDependentStem(mu.support.names(self.stem),
                                         mu.support.names(other))
        super().__init__(delete_stem(mu.support, self.stem),
                         f'{mu.name}|{"".join(mu.support.names(self.stem))}', mu.grade)
        self.removed = removed

    @property
    def one(self):
        return self.base.one

    @property
    def zero(self):
        return self.base.zero

    def _prob(self, seq, taken):
        return self.base._prob(self.stem + seq, self.removed | taken) / self.base_prob

    def _weight(self, seq, taken, x):
        return self.base._weight(self.stem + seq, self.removed | taken, x)

    def _transition(self, seq, taken, budget):
        return self.base._transition(self.stem + seq, self.removed | taken, budget)

    def appearance(self, b):
        value = self.base.appearance(b)
        if value is not None and (value == 1 or value == 0):
            return value
        return None


def derived_stem_measure(mu: OIMeasure, a: Sequence) -> OIMeasure:
    """
    :raises ZeroProbabilityStem: mu.prob(a) = 0
    :raises OrderDependentStem: orderings of a get different probabilities
    """
    if not tuple(a):
        return mu
    return DerivedStemMeasure(mu, a)


def appearance_probability(mu: OIMeasure, b, horizon: int,
                           budget: int = DEFAULT_STEM_BUDGET):
    """
    Probability that b is among the first horizon elements: the sum over
    stems S of that size containing b of e(P_S) times the probability of any
    ordering of S
    :param mu: order-invariant measure
    :param b: element id
    :param horizon: number of steps
    :param budget: maximum number of stems
    :return: value in mu's arithmetic
    """
    o = mu.support
    o.check_element(b)
    total = mu.zero
    for stem in stems_of_size(o, horizon, budget):
        if b not in stem:
            continue
        seq = tuple(sorted(stem))
        value = mu._prob(seq, stem)
        if value:
            total = total + count_linear_extensions(o.restrict(stem)) * value
    logger.debug(f'{mu.name}: {o.name(b)} appears within {horizon} steps ' +
                 f'with probability {total}')
    return total


class AppearanceSplit:
    """
    mu = p * plus + (1 - p) * minus, where plus is mu conditioned on b
    appearing and minus on b never appearing. A side conditioned on an event
    of probability zero raises UndefinedConditioning
    """

    def __init__(self, element: str, plus, minus, appearance):
        self.element = element
        self._plus = plus
        self._minus = minus
        self.appearance = appearance

    @property
    def plus(self) -> OIMeasure:
        if self._plus is None:
            raise UndefinedConditioning(self.element, 'present')
        return self._plus

    @property
    def minus(self) -> OIMeasure:
        if self._minus is None:
            raise UndefinedConditioning(self.element, 'absent')
        return self._minus

    def __iter__(self):
        return iter((self._plus, self._minus, self.appearance))


def _sub_mixture(parts):
    """
    The components renormalized; a lone component is returned as is
    """
    if not parts:
        return None
    if len(parts) == 1:
        return parts[0][0]
    total = exact_sum(w for _, w in parts)
    return MixtureMeasure([(mu, w / total) for mu, w in parts])


def condition_on_appearance(mu: OIMeasure, b, horizon: int = DEFAULT_APPEARANCE_HORIZON,
                            budget: int = DEFAULT_STEM_BUDGET) -> AppearanceSplit:
    """
    Splits mu by the event that b is ever chosen. Exact when mu knows the
    appearance probability in closed form and, for values strictly between
    0 and 1, is a mixture of components in which b surely appears or surely
    does not. Otherwise the probability that b appears within horizon steps
    is used when it reaches 1
    :param mu: order-invariant measure
    :param b: element id
    :param horizon: steps for the fallback evaluation
    :param budget: stem budget for the fallback evaluation
    :return: AppearanceSplit
    :raises InconclusiveAtHorizon: the split cannot be settled exactly
    """
    name = mu.support.name(mu.support.check_element(b))
    appearance = mu.appearance(b)
    if appearance is None:
        estimate = appearance_probability(mu, b, horizon, budget)
        if estimate != 1:
            raise InconclusiveAtHorizon(name, horizon, estimate)
        appearance = estimate
    if appearance == 1:
        return AppearanceSplit(name, mu, None, appearance)
    if appearance == 0:
        return AppearanceSplit(name, None, mu, appearance)
    if isinstance(mu, MixtureMeasure):
        values = [((component, w), component.appearance(b))
                  for component, w in mu.components]
        if all(v is not None and (v == 1 or v == 0) for _, v in values):
            plus = _sub_mixture([part for part, v in values if v == 1 and part[1]])
            minus = _sub_mixture([part for part, v in values if v == 0 and part[1]])
            logger.info(f'Split {mu.name} on {name}: appearance {appearance}')
            return AppearanceSplit(name, plus, minus, appearance)
    raise InconclusiveAtHorizon(name, horizon, appearance)
