"""
Simulation of the process a measure defines: elements are drawn one at a
time from the transition law after the stem chosen so far
"""
import logging
from typing import NamedTuple

from causets.consts import DEFAULT_SIMULATION_BUDGET, MAX_SIMULATION_BUDGET
from causets.exceptions import ResourceLimit, UsageError
from causets.measures.base import OIMeasure
from causets.seeding import draw_index, make_rng, pick_float

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class Trajectory(NamedTuple):
    """
    The first steps of an infinite string x_1 x_2 ... drawn from a measure.
    Every prefix is an ordered stem of the support
    """
    seq: tuple
    seed: object
    measure: str

    def xi(self, j: int):
        """
        The j-th chosen element, counting from 1
        """
        if not 1 <= j <= len(self.seq):
            raise IndexError(f'Trajectory has {len(self.seq)} steps, asked for step {j}')
        return self.seq[j - 1]

    def Xi(self, j: int) -> frozenset:
        """
        The set of the first j chosen elements
        """
        if not 0 <= j <= len(self.seq):
            raise IndexError(f'Trajectory has {len(self.seq)} steps, asked for {j}')
        return frozenset(self.seq[:j])

    def __len__(self):
        return len(self.seq)

    def to_record(self, support) -> dict:
        return {'measure': self.measure, 'steps': len(self.seq),
                'seq': support.names(self.seq)}


def draw_next(stepper, rng, budget: int = DEFAULT_SIMULATION_BUDGET):
    """
    Draws the next element. Exhaustive transitions with exact weights are
    drawn exactly; truncated lists are widened until the drawn point falls
    inside the listed mass
    :raises ResourceLimit: the list would need more than MAX_SIMULATION_BUDGET
        entries
    """
    transition = stepper.transition(budget)
    if transition.exhaustive:
        return transition.elements[draw_index(rng, transition.weights)]
    target = rng.random()
    while True:
        index = pick_float([float(w) for w in transition.weights], target)
        if index is not None:
            return transition.elements[index]
        if budget >= MAX_SIMULATION_BUDGET:
            raise ResourceLimit(MAX_SIMULATION_BUDGET, 'listed minimal elements')
        budget *= 2
        logger.debug(f'Widening the transition list to {budget} elements')
        transition = stepper.transition(budget)


def simulate(mu: OIMeasure, steps: int, seed, budget: int = DEFAULT_SIMULATION_BUDGET,
             stop=None) -> Trajectory:
    """
    Draws the first steps of the process of mu, deterministically per seed
    :param mu: measure
    :param steps: number of elements drawn
    :param seed: seed material or numpy Generator
    :param budget: initial length of truncated transition lists
    :param stop: optional predicate on the sequence so far that ends the
        draw early
    :return: Trajectory
    """
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 0:
        raise UsageError(f'Number of steps must be a non-negative int, got {steps!r}')
    rng = make_rng(seed)
    stepper = mu.stepper()
    for _ in range(steps):
        stepper.push(draw_next(stepper, rng, budget))
        if stop is not None and stop(stepper.seq):
            break
    return Trajectory(tuple(stepper.seq), seed, mu.name)
