"""
Order-invariant measures on downward-branching trees

In a finite tree with its root on top, the first element of a uniform
linear extension is the minimal x with probability
prod d(y_{k-1}) / (d(y_k) - 1) over the path x = y_0 < y_1 < ... up to the
root, d(y) counting D[y]. On the infinite tree the path runs up the
reference chain forever; past the pendant forests every chain step at a
level carrying a forest contributes 1 - t, and the product is truncated at a
depth where the tail bound makes the rest negligible
"""
import logging
import math
from bisect import bisect_right
from fractions import Fraction
from typing import NamedTuple, Optional

from causets.consts import (DEFAULT_MINIMAL_BUDGET, DEFAULT_TREE_TOLERANCE,
                            FLOAT_TOLERANCE, MARKING_TOLERANCE)
from causets.exceptions import TailUnbounded
from causets.families.tree import DownTree, TreeSpec
from causets.measures.base import Grade, OIMeasure, Transition
from causets.poset.sampling import sample_uniform_extension
from causets.seeding import make_rng, randbelow

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

MAX_DEPTH = 2 ** 62


def as_tree(spec) -> DownTree:
    if isinstance(spec, DownTree):
        return spec
    if isinstance(spec, TreeSpec):
        return DownTree(spec)
    raise TypeError(f'Expected a TreeSpec or DownTree, got {type(spec)}')


def settled_depth(spec: TreeSpec, start: int, tol) -> int:
    """
    Smallest doubling of start at which twice the tail bound is within tol
    :raises TailUnbounded: no bound, a divergent bound, or no depth works
    """
    if spec.finite:
        return max(start, spec.last_level())
    j = max(start, 1)
    while j <= MAX_DEPTH:
        bound = spec.tail(j)
        if bound is None or bound == math.inf:
            raise TailUnbounded(f'the t_i of tree "{spec.label}"')
        if 2 * bound <= tol:
            return j
        j *= 2
    raise TailUnbounded(f'the t_i of tree "{spec.label}" within {tol}')


class TreeMeasure(OIMeasure):
    """
    The transition weight of a minimal x after a stem A is the first-element
    probability of x in the finite tree D[x_J] minus A, for a depth J that
    contains A, has b_J >= 2|A| and leaves a tail below tol. Those weights sum
    to exactly 1 and underestimate the limit by a relative error of at most
    2 * tail(J)

    :param tree: the DownTree
    :param tol: truncation tolerance for infinite supports
    """

    def __init__(self, tree: DownTree, tol=DEFAULT_TREE_TOLERANCE):
        spec = tree.spec
        super().__init__(tree, f'tree-{spec.label}',
                         Grade.EXACT_RATIONAL if spec.finite else Grade.FLOAT)
        self.spec = spec
        self.tol = tol

    @property
    def tolerance(self):
        # each factor of a product may fall short by a relative tol
        return self.grade.tolerance if self.grade.exact else 2 * self.tol + FLOAT_TOLERANCE

    def depth(self, taken) -> int:
        """
        The truncation depth J(A)
        """
        start = max([self.support.level(x) for x in taken] + [1, 2 * len(taken)])
        return settled_depth(self.spec, start, self.tol)

    @staticmethod
    def _free(ordered: list, hi: int) -> int:
        """
        Ids in [0, hi] outside the stem
        """
        return hi + 1 - bisect_right(ordered, hi)

    def _pendant_free(self, level: int, local, taken) -> int:
        forest = self.spec.forest(level)
        return sum(1 for y in forest.down(local) | {local}
                   if self.spec.pendant_id(level, y) not in taken)

    def factors(self, taken, x, j: int) -> list:
        """
        The factors d(y_{k-1}) / (d(y_k) - 1) along the path from the
        minimal element x up to x_j, skipping chain steps equal to 1
        :return: list of Fractions
        """
        ordered = sorted(taken)
        level, local = self.spec.locate(x)
        result = []
        if local is not None:
            forest = self.spec.forest(level)
            previous = 1
            covers = forest.upper_covers(local)
            while covers:
                local = covers[0]
                current = self._pendant_free(level, local, taken)
                result.append(Fraction(previous, current - 1))
                previous = current
                covers = forest.upper_covers(local)
            current = self._free(ordered, self.spec.chain_id(level))
            result.append(Fraction(previous, current - 1))
        for k in self.spec.levels_between(level, j):
            start = self.spec.chain_id(k - 1) + 1
            size = self.spec.a(k)
            inside = bisect_right(ordered, start + size - 1) - bisect_right(ordered, start - 1)
            if size - inside:
                below = self._free(ordered, self.spec.chain_id(k - 1))
                result.append(Fraction(below, below + size - inside))
        return result

    def exact_weight(self, taken, x, j: int) -> Fraction:
        value = Fraction(1)
        for factor in self.factors(taken, x, j):
            value *= factor
        return value

    def _value(self, value: Fraction):
        return value if self.grade.exact else float(value)

    def _weight(self, seq, taken, x):
        j = max(self.depth(taken), self.support.level(x))
        return self._value(self.exact_weight(taken, x, j))

    def minimal_within(self, taken, j: int) -> list:
        """
        Minimal elements of D[x_j] minus the stem, in id order
        """
        found = []
        chains = sum(1 for x in taken if self.spec.locate(x)[1] is None)
        chain = self.spec.chain_id(chains)
        if chains <= j and all(y in taken for y in range(chain)):
            found.append(chain)
        for level in self.spec.levels_between(0, j):
            found.extend(self.support.pendant_minimal(level, taken))
        return sorted(found)

    def first_element_law(self, stem=(), depth: int = None) -> dict:
        """
        Exact truncated first-element law after an ordered stem
        :param stem: ordered stem
        :param depth: truncation depth; defaults to J(A)
        :return: dict id -> Fraction, summing to 1
        """
        taken = self.support.check_stem(tuple(stem))
        j = self.depth(taken) if depth is None else depth
        return {x: self.exact_weight(taken, x, j) for x in self.minimal_within(taken, j)}

    def _transition(self, seq, taken, budget):
        j = self.depth(taken)
        elements = self.minimal_within(taken, j)
        weights = [self._value(self.exact_weight(taken, x, j)) for x in elements[:budget]]
        complete = self.spec.finite and len(elements) <= budget
        if complete:
            return Transition(tuple(elements), tuple(weights), True, 0)
        rest = self.one - sum(weights, self.zero)
        tail = rest + (0 if self.spec.finite else self.tol)
        return Transition(tuple(elements[:budget]), tuple(weights), False, tail)


class TreeMeasureResult(NamedTuple):
    exists: bool
    tail_sum_bound: object
    measure: Optional[TreeMeasure]
    t_sequences: dict


def t_sequences(measure: TreeMeasure) -> dict:
    """
    For each minimal element at the empty stem, the values t = 1 - factor
    along its path, so its first-element probability is prod (1 - t)
    """
    j = measure.depth(frozenset())
    return {measure.support.name(x): tuple(1 - f for f in measure.factors(frozenset(), x, j))
            for x in measure.minimal_within(frozenset(), j)}


def tree_measure(spec, tol=DEFAULT_TREE_TOLERANCE) -> TreeMeasureResult:
    """
    Decides whether the tree carries an order-invariant measure (the t_i
    summable) and builds it when it does
    :param spec: TreeSpec or DownTree
    :param tol: truncation tolerance for infinite supports
    :return: TreeMeasureResult
    :raises TailUnbounded: an infinite support without a tail bound
    """
    tree = as_tree(spec)
    spec = tree.spec
    bound = spec.tail(0)
    if bound is None:
        raise TailUnbounded(f'the t_i of tree "{spec.label}"')
    if bound == math.inf:
        logger.info(f'Tree "{spec.label}" has divergent t_i: no measure')
        levels = spec.levels_between(0, DEFAULT_MINIMAL_BUDGET)
        return TreeMeasureResult(False, math.inf, None,
                                 {'x0': tuple(spec.t(i) for i in levels)})
    measure = TreeMeasure(tree, tol)
    logger.info(f'Tree "{spec.label}": sum of t_i at most {bound}')
    return TreeMeasureResult(True, bound, measure, t_sequences(measure))


def marking_depth(spec: TreeSpec) -> int:
    if spec.finite:
        return spec.last_level()
    return settled_depth(spec, 1, MARKING_TOLERANCE)


def tree_marking_sampler(spec, seed) -> int:
    """
    Draws the first element of the tree's process by marking: each forest
    A_i is marked with probability t_i; the answer is the bottom of a uniform
    linear extension of the last marked forest, or x0 when none is marked.
    Infinite supports stop where the tail bound falls below 1e-12
    :param spec: TreeSpec or DownTree
    :param seed: seed material or numpy Generator
    :return: element id
    """
    tree = as_tree(spec)
    spec = tree.spec
    if spec.tail(0) == math.inf:
        raise TailUnbounded(f'the t_i of tree "{spec.label}"')
    rng = make_rng(seed)
    marked = None
    for level in spec.levels_between(0, marking_depth(spec)):
        size = spec.a(level)
        if size and randbelow(rng, spec.b(level)) < size:
            marked = level
    if marked is None:
        return spec.chain_id(0)
    order = sample_uniform_extension(spec.forest(marked), rng)
    return spec.pendant_id(marked, order[0])
