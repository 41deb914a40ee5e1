"""
Named measure presets for configs and the command line
"""
from fractions import Fraction
from numbers import Rational

from causets.consts import DEFAULT_TREE_TOLERANCE
from causets.exceptions import UsageError
from causets.families.forest import ChainPlusPoint
from causets.families.linear_sum import linear_sum_causet, summand_sizes
from causets.families.presets import FAMILIES, TREES, parse_sizes
from causets.measures.controls import (perturbed_measure, point_mass_measure,
                                       sticky_kernel_measure)
from causets.measures.flow import (binary_flow, chain_point_flow, chains_inf_flow,
                                   comb_flow, mu_q, single_chain_flow)
from causets.measures.ladder import ladder_measure
from causets.measures.linear_sum import linear_sum_measure
from causets.measures.mixture import mixture_measure
from causets.measures.tree import tree_measure
from causets.measures.urn import urn_measure
from causets.registry import PresetRegistry

MEASURES = PresetRegistry('measure')


def parse_probability(value, what: str = 'probability'):
    """
    A Fraction from ints, Fractions and strings like "1/2" or "0.3"; floats
    stay floats
    """
    if isinstance(value, bool):
        raise UsageError(f'Expected a {what}, got {value!r}')
    if isinstance(value, float):
        result = value
    else:
        try:
            result = Fraction(value) if isinstance(value, (Rational, str)) else None
        except ValueError:
            result = None
        if result is None:
            raise UsageError(f'Expected a {what}, got {value!r}')
    if not 0 <= result <= 1:
        raise UsageError(f'A {what} must lie in [0, 1], got {value!r}')
    return result


def parse_positive_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise UsageError(f'Expected a positive integer {what}, got {value!r}')
    try:
        result = int(value)
    except ValueError:
        raise UsageError(f'Expected a positive integer {what}, got {value!r}') from None
    if result < 1:
        raise UsageError(f'Expected a positive integer {what}, got {value!r}')
    return result


@MEASURES.preset('ladder', 'the unique measure on the ladder, exact in Q(sqrt 5)')
def ladder_preset():
    return ladder_measure()


@MEASURES.preset('mu-q', 'two chains, B chosen with probability q at every step',
                 q=Fraction(1, 2))
def mu_q_preset(q):
    return mu_q(parse_probability(q, 'q'))


@MEASURES.preset('urn', 'Polya urn on two chains with initial weights alpha, beta',
                 alpha=1, beta=1)
def urn_preset(alpha, beta):
    return urn_measure(parse_positive_int(alpha, 'alpha'), parse_positive_int(beta, 'beta'))


@MEASURES.preset('mixture', 'w * mu-q(q1) + (1 - w) * mu-q(q2)',
                 q1=Fraction(1, 5), q2=Fraction(4, 5), w=Fraction(1, 2))
def mixture_preset(q1, q2, w):
    w = parse_probability(w, 'mixture weight')
    return mixture_measure([(mu_q(parse_probability(q1, 'q1')), w),
                            (mu_q(parse_probability(q2, 'q2')), 1 - w)])


MEASURES.register('chains-inf', chains_inf_flow,
                  'countably many chains, chain i taken with probability 2^-i')
MEASURES.register('binary', binary_flow, 'halving flow on the binary tree')
MEASURES.register('comb', comb_flow, 'halving flow on the comb')
MEASURES.register('chain-point', chain_point_flow,
                  'all flow on the chain of an infinite chain plus a point')
MEASURES.register('single-chain', single_chain_flow, 'the only measure on one chain')


@MEASURES.preset('tree', 'the measure of a downward-branching tree preset',
                 shape='pendants-x1-x2', tol=DEFAULT_TREE_TOLERANCE)
def tree_preset(shape, tol):
    result = tree_measure(TREES.create(shape), float(tol))
    if not result.exists:
        raise UsageError(f'Tree "{shape}" carries no order-invariant measure')
    return result.measure


@MEASURES.preset('linear-sum', 'the unique measure on stacked antichains', sizes='2,2')
def linear_sum_preset(sizes):
    return linear_sum_measure(linear_sum_causet(summand_sizes(parse_sizes(sizes))))


@MEASURES.preset('point-mass', 'all mass on the canonical enumeration of a family',
                 family='chains')
def point_mass_preset(family):
    support = FAMILIES.create(family)
    measure = point_mass_measure(support, lambda i: i, support.contains)
    measure.name = f'point-mass-{family}'
    return measure


@MEASURES.preset('chain-point-mass', 'all mass on the chain b1 b2 ... beside a point')
def chain_point_mass_preset():
    support = ChainPlusPoint()
    measure = point_mass_measure(support, lambda i: support.id_of((0,) * (i + 1)),
                                 lambda b: support.path_of(b)[0] == 0)
    measure.name = 'chain-point-mass'
    return measure


@MEASURES.preset('sticky', 'order-dependent kernel on two chains', q_same=Fraction(3, 4))
def sticky_preset(q_same):
    return sticky_kernel_measure(parse_probability(q_same, 'q_same'))


@MEASURES.preset('perturbed', 'the ladder measure with prob(a1) shifted by delta',
                 delta=Fraction(1, 100))
def perturbed_preset(delta):
    return perturbed_measure(ladder_measure(), (0,), parse_probability(delta, 'delta'))
