"""
Finite convex combinations of measures sharing a support
"""
import logging
from fractions import Fraction
from numbers import Rational

from causets.consts import DEFAULT_MINIMAL_BUDGET
from causets.exact import exact_sum
from causets.exceptions import SupportMismatch, UsageError, ZeroProbabilityStem
from causets.measures.base import Grade, OIMeasure, Stepper, Transition

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class MixtureMeasure(OIMeasure):
    """
    prob is the weighted sum of the component probabilities; the transition
    weight of x after s is prob(s.x)/prob(s)

    :param components: list of (measure, weight) with weights summing to 1
    """

    def __init__(self, components):
        components = [(mu, w) for mu, w in components]
        if not components:
            raise UsageError('A mixture needs at least one component')
        support = components[0][0].support
        for mu, _ in components[1:]:
            if mu.support != support:
                raise SupportMismatch(support.family, mu.support.family)
        weights = [w for _, w in components]
        if any(w < 0 for w in weights):
            raise UsageError(f'Mixture weights must be non-negative, got {weights}')
        exact = all(isinstance(w, Rational) for w in weights)
        total = exact_sum(weights)
        if (total != 1) if exact else abs(total - 1) > 1e-12:
            raise UsageError(f'Mixture weights must sum to 1, got {total}')
        grade = Grade.worst([mu.grade for mu, _ in components] +
                            ([] if exact else [Grade.FLOAT]))
        name = ' + '.join(f'{w}*{mu.name}' for mu, w in components)
        super().__init__(support, name, grade)
        self.components = tuple((mu, Fraction(w) if exact else w)
                                for mu, w in components)

    def _prob(self, seq, taken):
        return exact_sum(w * mu._prob(seq, taken) for mu, w in self.components if w)

    def _weight(self, seq, taken, x):
        before = self._prob(seq, taken)
        if not before:
            raise ZeroProbabilityStem(self.support.names(seq))
        return self._prob(seq + (x,), taken | {x}) / before

    def appearance(self, b):
        values = [mu.appearance(b) for mu, _ in self.components]
        if any(v is None for v in values):
            return None
        return exact_sum(w * v for (_, w), v in zip(self.components, values))

    def stepper(self):
        return MixtureStepper(self)


def mixture_measure(components) -> MixtureMeasure:
    return MixtureMeasure(components)


class MixtureStepper(Stepper):
    """
    Keeps one stepper per component with its posterior mass w * prob(stem),
    so a step costs one transition per component
    """

    def __init__(self, measure: MixtureMeasure):
        super().__init__(measure)
        self.parts = [(mu.stepper(), w) for mu, w in measure.components if w]
        self._laws = None

    def _component_laws(self, budget) -> list:
        if self._laws is None or self._laws[0] != budget:
            self._laws = (budget, [stepper.transition(budget) for stepper, _ in self.parts])
        return self._laws[1]

    def transition(self, budget=DEFAULT_MINIMAL_BUDGET) -> Transition:
        laws = self._component_laws(budget)
        total = exact_sum(mass for _, mass in self.parts)
        elements = laws[0].elements
        weights = tuple(exact_sum(mass * (law.weight_of(x) or 0)
                                  for law, (_, mass) in zip(laws, self.parts)) / total
                        for x in elements)
        if all(law.exhaustive for law in laws):
            return Transition(elements, weights, True, 0)
        return Transition(elements, weights, False, max(1 - exact_sum(weights), 0))

    def push(self, x):
        budget = self._laws[0] if self._laws is not None else DEFAULT_MINIMAL_BUDGET
        laws = self._component_laws(budget)
        parts = []
        for law, (stepper, mass) in zip(laws, self.parts):
            weight = law.weight_of(x)
            if weight is None:
                weight = stepper.measure.weight(tuple(stepper.seq), x)
            stepper.push(x)
            parts.append((stepper, mass * weight))
        self.parts = [part for part in parts if part[1]]
        self._laws = None
        super().push(x)
