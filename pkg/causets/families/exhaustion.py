"""
Exhaustion rules: increasing sequences of stems Z_1, Z_2, ... whose union
is the whole causet, and the finite restrictions they cut out
"""
import logging
from collections.abc import Callable

from causets.exceptions import NotExhaustive, UsageError
from causets.families.grid import GridCauset
from causets.families.ladder import LadderCauset
from causets.families.oracle import CausetOracle
from causets.poset.finite import FinitePoset
from causets.registry import PresetRegistry

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

EXHAUSTIONS = PresetRegistry('exhaustion')


@EXHAUSTIONS.preset('prefix', 'the first n elements of the canonical enumeration')
def prefix_rule() -> Callable:
    def stem(o: CausetOracle, n: int) -> frozenset:
        return frozenset(o.enumerate(n))
    return stem


@EXHAUSTIONS.preset('alternating', 'round-robin over chains; the prefix rule ' +
                    'for families enumerated level by level')
def alternating_rule() -> Callable:
    return prefix_rule()


@EXHAUSTIONS.preset('levels', "the family's own level stems")
def levels_rule() -> Callable:
    def stem(o: CausetOracle, n: int) -> frozenset:
        return o.level_stem(n)
    return stem


@EXHAUSTIONS.preset('square', 'n x n squares of the grid')
def square_rule() -> Callable:
    def stem(o: CausetOracle, n: int) -> frozenset:
        if not isinstance(o, GridCauset):
            raise UsageError(f'The square exhaustion needs the grid, not {o.family}')
        return o.square_stem(n)
    return stem


@EXHAUSTIONS.preset('zigzag', 'Z_1, W_2, Z_3, ... on the ladder')
def zigzag_rule() -> Callable:
    def stem(o: CausetOracle, n: int) -> frozenset:
        if not isinstance(o, LadderCauset):
            raise UsageError(f'The zigzag exhaustion needs the ladder, not {o.family}')
        return o.level_stem(n)
    return stem


def exhaustion_rule(sel) -> Callable:
    """
    :param sel: registered rule name or a callable (oracle, n) -> stem
    :return: callable (oracle, n) -> frozenset
    """
    if callable(sel):
        return sel
    return EXHAUSTIONS.create(sel)


def exhaustion_stem(o: CausetOracle, sel, n: int) -> frozenset:
    """
    Z_n of the exhaustion, checked to be a stem strictly larger than Z_{n-1}
    :param o: oracle
    :param sel: rule name or callable
    :param n: index from 1
    :return: frozenset of ids
    """
    if n < 1:
        raise UsageError(f'Exhaustion index must be at least 1, got {n}')
    rule = exhaustion_rule(sel)
    label = sel if isinstance(sel, str) else getattr(sel, '__name__', 'custom')
    current = o.check_down_set(rule(o, n))
    if not current:
        raise NotExhaustive(label, n)
    if n > 1:
        previous = o.check_down_set(rule(o, n - 1))
        if not previous < current:
            raise NotExhaustive(label, n)
    return current


def finite_restriction(o: CausetOracle, sel, n: int) -> FinitePoset:
    """
    The restriction P_{Z_n} of the causet to the n-th stem of an exhaustion
    :param o: oracle
    :param sel: rule name or callable
    :param n: index from 1
    :return: FinitePoset labelled with element names
    """
    stem = exhaustion_stem(o, sel, n)
    logger.debug(f'Restricting {o.family} to {len(stem)} elements (n = {n})')
    return o.restrict(stem)
