"""
Flow measures on upward-branching forests: a flow f gives every minimal
element x after any stem the transition weight f(x), so the probability of a
stem is the product of f over its elements
"""
import itertools
import logging
import math
from collections.abc import Callable
from fractions import Fraction
from numbers import Rational

from causets.consts import DEFAULT_MINIMAL_BUDGET
from causets.exceptions import FlowViolation, HasMaximalElement
from causets.families.forest import (ChainPlusPoint, DisjointChains,
                                     ForestCauset, binary_tree_causet,
                                     comb_causet)
from causets.measures.base import Grade, OIMeasure

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class FlowSpec:
    """
    A non-negative function on the paths of a forest with f(x) equal to the
    sum of f over the upper covers of x, and f summing to 1 over the roots

    :param f: callable path -> value
    :param label: name used in reports
    """

    def __init__(self, f: Callable, label: str = 'flow'):
        self.f = f
        self.label = label

    def __call__(self, path: tuple):
        value = self.f(tuple(path))
        if value < 0:
            raise ValueError(f'Flow "{self.label}" is negative at {path}: {value}')
        return value

    def __repr__(self):
        return f'FlowSpec({self.label})'


def check_flow(spec: FlowSpec, forest: ForestCauset, n: int = DEFAULT_MINIMAL_BUDGET,
               scan: int = DEFAULT_MINIMAL_BUDGET):
    """
    Verifies the flow identities at the roots and at the first n elements.
    Finitely branching nodes must balance exactly; for infinite branching the
    partial sums over the first scan children must not exceed the parent
    :raises HasMaximalElement: a maximal element carries positive flow
    :raises FlowViolation: an identity fails
    """
    parents = [((), 1)]
    for x in forest.enumerate(n):
        path = forest.path_of(x)
        value = spec(path)
        if forest.children(path) == 0:
            if value > 0:
                raise HasMaximalElement(forest.name(x))
            continue
        parents.append((path, value))
    for path, value in parents:
        count = forest.children(path)
        if count == math.inf:
            total = 0
            for c in range(scan):
                total = total + spec(path + (c,))
                if total > value + (0 if isinstance(total, Rational) else 1e-12):
                    raise FlowViolation(path or 'roots', value, total)
            continue
        total = sum((spec(path + (c,)) for c in range(count)), 0)
        exact = isinstance(total, Rational) and isinstance(value, Rational)
        if (total != value) if exact else abs(total - value) > 1e-12:
            raise FlowViolation(path or 'roots', value, total)


class FlowMeasure(OIMeasure):
    """
    :param spec: the flow
    :param forest: upward-branching forest without maximal elements
    :param check_depth: number of enumerated elements whose identities are
        verified up front
    """

    def __init__(self, spec: FlowSpec, forest: ForestCauset,
                 check_depth: int = DEFAULT_MINIMAL_BUDGET):
        check_flow(spec, forest, check_depth)
        exact = isinstance(spec(forest.path_of(0)), Rational)
        super().__init__(forest, f'flow-{spec.label}',
                         Grade.EXACT_RATIONAL if exact else Grade.FLOAT)
        self.spec = spec

    def f(self, x):
        value = self.spec(self.support.path_of(x))
        return Fraction(value) if self.grade.exact else float(value)

    def _weight(self, seq, taken, x):
        return self.f(x)

    def _prob(self, seq, taken):
        value = self.one
        for x in seq:
            value = value * self.f(x)
        return value

    def appearance(self, b):
        return self.one if self.f(b) > 0 else self.zero

    def is_faithful(self, n: int = DEFAULT_MINIMAL_BUDGET) -> bool:
        """
        Positive flow on the first n elements
        """
        return all(self.f(x) > 0 for x in self.support.enumerate(n))


def flow_measure(spec: FlowSpec, forest: ForestCauset) -> FlowMeasure:
    return FlowMeasure(spec, forest)


def mu_q(q=Fraction(1, 2)) -> FlowMeasure:
    """
    Two chains B and C, choosing B with probability q at every step
    """
    q = Fraction(q) if isinstance(q, (Rational, str)) else q
    if not 0 <= q <= 1:
        raise ValueError(f'q must lie in [0, 1], got {q}')
    spec = FlowSpec(lambda path: q if path[0] == 0 else 1 - q, label=f'q={q}')
    measure = FlowMeasure(spec, DisjointChains(2))
    measure.name = f'mu-q({q})'
    return measure


def chains_inf_flow() -> FlowMeasure:
    """
    Countably many chains, chain i chosen with probability 2^-(i+1)
    """
    spec = FlowSpec(lambda path: Fraction(1, 2 ** (path[0] + 1)), label='chains-inf')
    return FlowMeasure(spec, DisjointChains(math.inf))


def binary_flow() -> FlowMeasure:
    """
    The binary tree with the flow halving at every branching
    """
    spec = FlowSpec(lambda path: Fraction(1, 2 ** (len(path) - 1)), label='binary')
    return FlowMeasure(spec, binary_tree_causet())


def comb_flow() -> FlowMeasure:
    """
    The comb: the spine element at depth d carries 2^-(d-1) and the tooth
    starting above it carries 2^-d all the way up
    """
    def f(path):
        if not any(path[1:]):
            return Fraction(1, 2 ** (len(path) - 1))
        first = next(i for i, c in enumerate(path) if i and c)
        return Fraction(1, 2 ** first)
    return FlowMeasure(FlowSpec(f, label='comb'), comb_causet())


def chain_point_flow() -> FlowMeasure:
    """
    All flow on the chain; the isolated element gets none
    """
    spec = FlowSpec(lambda path: Fraction(0) if path[0] == 1 else Fraction(1),
                    label='chain-point')
    return FlowMeasure(spec, ChainPlusPoint())


def single_chain_flow() -> FlowMeasure:
    return FlowMeasure(FlowSpec(lambda path: Fraction(1), label='single-chain'),
                       DisjointChains(1))


def flow_identity_residual(measure: FlowMeasure, stems) -> Fraction:
    """
    Largest |sum of f over the minimal elements after A - 1| over the given
    stems, using exhaustive lists only
    """
    worst = measure.zero
    for stem in stems:
        minimal = measure.support.extensions_first(frozenset(stem), DEFAULT_MINIMAL_BUDGET)
        if not minimal.exhaustive:
            continue
        total = sum((measure.f(x) for x in minimal.elements), measure.zero)
        worst = max(worst, abs(total - 1))
    return worst
