"""
Downward-branching trees: a reference chain x0 < x1 < ... with a finite
forest A_i hanging below each x_i. Every element has exactly one upper cover
"""
import itertools
import logging
import math
import re
import threading
from bisect import bisect_left, bisect_right
from collections.abc import Callable, Iterable
from fractions import Fraction

from causets.consts import DEFAULT_SCAN_LIMIT
from causets.exceptions import UsageError
from causets.families.oracle import CausetOracle, MinimalElements
from causets.poset.finite import FinitePoset, antichain, build_finite_poset

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

CHAIN_NAME = re.compile(r'^x([0-9]+)$')
PENDANT_NAME = re.compile(r'^y([1-9][0-9]*)(?:_([1-9][0-9]*))?$')


def check_downward_branching(forest: FinitePoset, level: int):
    for x in forest.elements:
        if len(forest.upper_covers(x)) > 1:
            raise ValueError(f'Pendant forest at level {level} is not ' +
                             f'downward-branching: {forest.name(x)} has ' +
                             f'{len(forest.upper_covers(x))} upper covers')


class TreeSpec:
    """
    Description of a downward-branching tree by its pendant forests. Only
    the levels listed by the support carry a forest; the rest are bare chain
    steps. Forests are built on first use

    With a_i = |A_i| and b_i = |D(x_i)| = i + a_1 + ... + a_i the tree has an
    order-invariant measure exactly when the t_i = a_i / b_i are summable

    :param pendant: callable level -> FinitePoset, the forest A_i; None for
        a bare chain
    :param support: finite collection of levels carrying forests, or a
        callable returning an increasing iterator over infinitely many
    :param tail_bound: callable J -> upper bound on the sum of t_i over
        i > J, or math.inf when the sum diverges; finite supports need none
    :param label: name used in signatures and reports
    """

    def __init__(self, pendant: Callable = None, support=(),
                 tail_bound: Callable = None, label: str = 'tree'):
        if callable(support):
            self.finite = False
            self._support = iter(support())
        else:
            levels = sorted(set(support))
            if any(isinstance(i, bool) or not isinstance(i, int) or i < 1
                   for i in levels):
                raise ValueError(f'Tree support levels must be positive ints, got {levels}')
            self.finite = True
            self._support = iter(levels)
        if pendant is None and not (self.finite and not levels):
            raise ValueError('A tree with pendant levels needs a pendant callable')
        self._pendant = pendant
        self.tail_bound = tail_bound
        self.label = label
        self._levels = []
        self._forests = []
        self._orders = []
        self._sequences = []
        # a_i summed over the materialized levels, inclusive
        self._cumulative = []
        # id of the first pendant element at each materialized level
        self._starts = []
        self._exhausted = False
        self._lock = threading.RLock()

    def __repr__(self):
        return f'TreeSpec({self.label})'

    def _materialize(self) -> bool:
        with self._lock:
            if self._exhausted:
                return False
            level = next(self._support, None)
            if level is None:
                self._exhausted = True
                return False
            if self._levels and level <= self._levels[-1]:
                raise ValueError(f'Tree support must increase, got {level} ' +
                                 f'after {self._levels[-1]}')
            forest = self._pendant(level)
            check_downward_branching(forest, level)
            before = self._cumulative[-1] if self._cumulative else 0
            order = forest.canonical_extension()
            self._levels.append(level)
            self._forests.append(forest)
            self._orders.append({y: k for k, y in enumerate(order)})
            self._sequences.append(order)
            self._starts.append(level + before)
            self._cumulative.append(before + forest.n)
            logger.debug(f'Tree "{self.label}": level {level} carries ' +
                         f'{forest.n} pendant element(s)')
            return True

    def _ensure_level(self, m: int):
        """
        Materializes every support level up to m
        """
        while not self._exhausted and (not self._levels or self._levels[-1] <= m):
            self._materialize()

    def _ensure_id(self, x: int):
        while not self._exhausted and (not self._starts or self._starts[-1] <= x):
            self._materialize()

    def last_level(self):
        """
        Highest support level of a finite support, None for infinite ones
        """
        if not self.finite:
            return None
        while self._materialize():
            pass
        return self._levels[-1] if self._levels else 0

    def levels_between(self, lo: int, hi: int) -> list:
        """
        Support levels i with lo < i <= hi
        """
        self._ensure_level(hi)
        return self._levels[bisect_right(self._levels, lo):bisect_right(self._levels, hi)]

    def _index(self, level: int):
        self._ensure_level(level)
        k = bisect_left(self._levels, level)
        if k < len(self._levels) and self._levels[k] == level:
            return k
        return None

    def forest(self, level: int) -> FinitePoset:
        k = self._index(level)
        return antichain(0) if k is None else self._forests[k]

    def rank(self, level: int, local) -> int:
        """
        Position of a pendant element in the canonical extension of its forest
        """
        return self._orders[self._index(level)][local]

    def a(self, level: int) -> int:
        return self.forest(level).n

    def cumulative(self, m: int) -> int:
        """
        a_1 + ... + a_m
        """
        self._ensure_level(m)
        k = bisect_right(self._levels, m)
        return self._cumulative[k - 1] if k else 0

    def b(self, level: int) -> int:
        return level + self.cumulative(level)

    def t(self, level: int) -> Fraction:
        return Fraction(self.a(level), self.b(level))

    def tail(self, j: int):
        """
        Upper bound on the sum of t_i over i > j: exact for finite supports,
        None when no bound was supplied
        """
        if self.finite:
            self.last_level()
            return sum((self.t(i) for i in self._levels if i > j), Fraction(0))
        if self.tail_bound is None:
            return None
        return self.tail_bound(j)

    def locate(self, x: int):
        """
        :return: (level, local element of A_level) for pendant elements and
            (m, None) for the chain element x_m
        """
        self._ensure_id(x)
        k = bisect_right(self._starts, x) - 1
        if k < 0:
            return x, None
        offset = x - self._starts[k]
        if offset < self._forests[k].n:
            return self._levels[k], self._sequences[k][offset]
        return x - self._cumulative[k], None

    def chain_id(self, m: int) -> int:
        return m + self.cumulative(m)

    def pendant_id(self, level: int, local) -> int:
        k = self._index(level)
        return self._starts[k] + self._orders[k][local]


class DownTree(CausetOracle):
    """
    The causet of a TreeSpec. Ids follow the construction order x0, A_1, x1,
    A_2, x2, ... with each A_i listed along its canonical linear extension,
    so D(x_m) is exactly the ids below x_m

    :param spec: the TreeSpec
    """
    family = 'tree'

    def __init__(self, spec: TreeSpec):
        super().__init__()
        self.spec = spec

    def locate(self, x):
        return self.spec.locate(self.check_element(x))

    def level(self, x) -> int:
        return self.locate(x)[0]

    def less(self, x, y) -> bool:
        (i, u), (j, v) = self.locate(x), self.locate(y)
        if v is None:
            return i < j if u is None else i <= j
        if u is None:
            return False
        return i == j and self.spec.forest(i).less(u, v)

    def _down(self, x):
        level, local = self.locate(x)
        if local is None:
            return range(x)
        return [self.spec.pendant_id(level, y) for y in self.spec.forest(level).down(local)]

    def pendant_minimal(self, level: int, stem) -> list:
        forest = self.spec.forest(level)
        taken = [y for y in forest.elements if self.spec.pendant_id(level, y) in stem]
        free = forest.members(forest.available(forest.mask(taken)))
        return [self.spec.pendant_id(level, y) for y in free]

    def _minimal(self, stem, budget):
        m = sum(1 for x in stem if self.locate(x)[1] is None)
        found = []
        chain = self.spec.chain_id(m)
        if all(x in stem for x in range(chain)):
            found.append(chain)
        deepest = max((self.level(x) for x in stem), default=0)
        if self.spec.finite:
            levels = self.spec.levels_between(0, self.spec.last_level())
        else:
            levels = self.spec.levels_between(0, deepest + DEFAULT_SCAN_LIMIT)
        for level in levels:
            found.extend(self.pendant_minimal(level, stem))
            if not self.spec.finite and len(found) > budget and level > deepest:
                break
        found = tuple(sorted(found))
        exhaustive = self.spec.finite and len(found) <= budget
        return MinimalElements(found[:budget], exhaustive)

    def is_maximal(self, x) -> bool:
        return False

    def level_stem(self, n: int) -> frozenset:
        """
        D[x_n]
        """
        return frozenset(range(self.spec.chain_id(n) + 1))

    def name(self, x) -> str:
        level, local = self.locate(x)
        if local is None:
            return f'x{level}'
        if self.spec.a(level) == 1:
            return f'y{level}'
        return f'y{level}_{self.spec.rank(level, local) + 1}'

    def parse(self, name: str):
        match = CHAIN_NAME.match(name)
        if match:
            return self.spec.chain_id(int(match.group(1)))
        match = PENDANT_NAME.match(name)
        if not match:
            raise UsageError(f'"{name}" is not a tree element name (x0, y1, y2_1, ...)')
        level = int(match.group(1))
        position = int(match.group(2) or 1) - 1
        forest = self.spec.forest(level)
        if position >= forest.n or (match.group(2) is None and forest.n != 1):
            raise UsageError(f'No element "{name}" in tree "{self.spec.label}"')
        return self.spec.pendant_id(level, forest.canonical_extension()[position])

    @property
    def signature(self) -> tuple:
        return ('tree', self.spec.label)


def down_tree_causet(spec: TreeSpec) -> DownTree:
    return DownTree(spec)


def single_leaf(level: int) -> FinitePoset:
    return antichain(1)


def cherry(level: int) -> FinitePoset:
    """
    Two leaves below a common element
    """
    return build_finite_poset((0, 1, 2), ((0, 2), (1, 2)))


def powers_of_two():
    return (2 ** k for k in itertools.count())


def bare_chain_tree() -> TreeSpec:
    return TreeSpec(label='chain')


def pendant_tree(levels: Iterable = (1,), label: str = None) -> TreeSpec:
    """
    Single leaves hanging at finitely many levels
    """
    levels = tuple(levels)
    return TreeSpec(single_leaf, levels,
                    label=label or 'pendants-' + '-'.join(f'x{i}' for i in levels))


def cherry_tree() -> TreeSpec:
    """
    A two-leaf cherry hanging at x1 only
    """
    return TreeSpec(cherry, (1,), label='cherry-x1')


def every_level_tree() -> TreeSpec:
    """
    A leaf at every level: t_i = 1/2i, so the t_i are not summable
    """
    return TreeSpec(single_leaf, lambda: itertools.count(1),
                    lambda j: math.inf, label='pendant-every-level')


def sparse_tree() -> TreeSpec:
    """
    Leaves at the levels 1, 2, 4, 8, ...; t at level 2^k is below 2^-k, so
    the tail beyond J is at most 2/J
    """
    return TreeSpec(single_leaf, powers_of_two,
                    lambda j: 2 / max(j, 1), label='sparse-pendants')
