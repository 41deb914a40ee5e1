"""
Linear sums P_1 + P_2 + ... of finite posets: every element of P_i lies below
every element of P_{i+1}
"""
import logging
import re
import threading
from bisect import bisect_right
from collections.abc import Iterable

from causets.exceptions import UsageError
from causets.families.oracle import CausetOracle, MinimalElements
from causets.poset.finite import FinitePoset, antichain

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

NAME = re.compile(r'^z([1-9][0-9]*)_([0-9]+)$')


class LinearSumCauset(CausetOracle):
    """
    Summands are produced lazily. Inside summand i, ids follow the summand's
    canonical linear extension, offset by the sizes of earlier summands

    :param summands: callable i -> FinitePoset (i from 0), or an iterable; a
        finite list is repeated cyclically
    :param label: text used in the signature for callables and generators
    """
    family = 'linear-sum'

    def __init__(self, summands, label: str = None):
        super().__init__()
        if callable(summands):
            self._source = summands
            key = label or getattr(summands, '__name__', 'summands')
        elif isinstance(summands, (list, tuple)):
            if not summands:
                raise ValueError('A linear sum needs at least one summand')
            fixed = tuple(summands)
            self._source = lambda i: fixed[i % len(fixed)]
            key = tuple((p.elements, p.covers) for p in fixed)
        elif isinstance(summands, Iterable):
            iterator = iter(summands)
            self._source = lambda i: next(iterator)
            key = label or 'generator'
        else:
            raise TypeError(f'Summands must be callable or iterable, got {type(summands)}')
        self._key = key
        self._summands = []
        self._orders = []
        self._offsets = [0]
        self._lock = threading.RLock()

    def _extend(self, index: int):
        with self._lock:
            while len(self._summands) <= index:
                poset = self._source(len(self._summands))
                if not isinstance(poset, FinitePoset) or poset.n == 0:
                    raise ValueError('Summands must be nonempty FinitePoset objects')
                self._summands.append(poset)
                self._orders.append(poset.canonical_extension())
                self._offsets.append(self._offsets[-1] + poset.n)

    def summand(self, index: int) -> FinitePoset:
        self._extend(index)
        return self._summands[index]

    def offset(self, index: int) -> int:
        self._extend(index)
        return self._offsets[index]

    def locate(self, x):
        """
        :param x: element id
        :return: (summand index, local element id)
        """
        self.check_element(x)
        while self._offsets[-1] <= x:
            self._extend(len(self._summands))
        index = bisect_right(self._offsets, x) - 1
        return index, self._orders[index][x - self._offsets[index]]

    def element(self, index: int, local) -> int:
        self._extend(index)
        return self._offsets[index] + self._orders[index].index(local)

    def less(self, x, y) -> bool:
        (i, u), (j, v) = self.locate(x), self.locate(y)
        if i != j:
            return i < j
        return self._summands[i].less(u, v)

    def _down(self, x):
        index, local = self.locate(x)
        below = set(range(self._offsets[index]))
        below.update(self.element(index, y) for y in self._summands[index].down(local))
        return below

    def current(self, stem: frozenset):
        """
        The first summand not entirely inside the stem
        :return: (summand index, local ids of the stem inside it)
        """
        index = 0
        while True:
            lo, hi = self.offset(index), self.offset(index + 1)
            inside = [x for x in stem if lo <= x < hi]
            if len(inside) < hi - lo:
                order = self._orders[index]
                return index, frozenset(order[x - lo] for x in inside)
            index += 1

    def _minimal(self, stem, budget):
        index, local = self.current(stem)
        poset = self._summands[index]
        mins = poset.members(poset.available(poset.mask(local)))
        found = tuple(sorted(self.element(index, y) for y in mins))
        return MinimalElements(found[:budget], len(found) <= budget)

    def level_stem(self, n: int) -> frozenset:
        """
        The union of the first n summands
        """
        return frozenset(range(self.offset(n)))

    def name(self, x) -> str:
        index, local = self.locate(x)
        return f'z{index + 1}_{local}'

    def parse(self, name: str):
        match = NAME.match(name)
        if not match:
            raise UsageError(f'"{name}" is not a linear-sum element name (z1_0, ...)')
        index, local = int(match.group(1)) - 1, int(match.group(2))
        if local not in self.summand(index):
            raise UsageError(f'Summand {index + 1} has no element {local}')
        return self.element(index, local)

    @property
    def signature(self) -> tuple:
        return ('linear-sum', self._key)


def linear_sum_causet(summands, label: str = None) -> LinearSumCauset:
    return LinearSumCauset(summands, label)


def summand_sizes(sizes: Iterable[int]) -> list:
    """
    Antichain summands of the given sizes, a convenient test family
    """
    return [antichain(k) for k in sizes]

