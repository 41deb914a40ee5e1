"""
A width-two causet built in stages: Z_1 = {a}, Z_2 = {a, b}, and Z_n adds a
chain C_n of m_n elements above all of Z_{n-2}, incomparable with C_{n-1}.
With fast growing m_n the uniform measures on Z_n oscillate between even and
odd n
"""
import logging
import re
import threading
from bisect import bisect_right
from collections.abc import Callable

from causets.consts import DEFAULT_CHAIN_CAP
from causets.exceptions import UsageError
from causets.families.oracle import CausetOracle, MinimalElements

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

NAME = re.compile(r'^c([0-9]+)_([1-9][0-9]*)$')


def double_exponential(n: int, cap: int = DEFAULT_CHAIN_CAP) -> int:
    """
    m_n = 2^(2^n), capped
    """
    if n >= 5:
        return cap
    return min(2 ** (2 ** n), cap)


def powers_of_two(n: int) -> int:
    """
    m_n = 2^n, small enough to evaluate Z_n exactly up to n = 8
    """
    return 2 ** n


class OscillatingCauset(CausetOracle):
    """
    Element x of chain C_i lies below y of chain C_j exactly when i == j and x
    comes first, or j >= i + 2. C_1 = {a} and C_2 = {b}; ids run through
    a, b, C_3, C_4, ... in order

    :param growth: callable n -> m_n for n >= 3, non-decreasing
    :param label: text identifying the growth sequence in signatures
    """
    family = 'oscillating'

    def __init__(self, growth: Callable = double_exponential, label: str = None):
        super().__init__()
        self.growth = growth
        self.label = label or getattr(growth, '__name__', 'growth')
        # offsets[i] is the id of the first element of chain C_{i+1}
        self._offsets = [0, 1, 2]
        self._lock = threading.RLock()

    def chain_length(self, n: int) -> int:
        return 1 if n <= 2 else self.growth(n)

    def _extend(self, chains: int):
        with self._lock:
            while len(self._offsets) <= chains:
                n = len(self._offsets)
                length = self.chain_length(n)
                if length < 1 or length < self.chain_length(n - 1) and n > 3:
                    raise ValueError(f'Chain lengths must be positive and ' +
                                     f'non-decreasing, m_{n} = {length}')
                self._offsets.append(self._offsets[-1] + length)

    def offset(self, n: int) -> int:
        """
        Id of the first element of chain C_n, which is also |Z_{n-1}|
        """
        self._extend(n)
        return self._offsets[n - 1]

    def locate(self, x):
        """
        :return: (chain number n, position in the chain from 1)
        """
        self.check_element(x)
        while self._offsets[-1] <= x:
            self._extend(len(self._offsets))
        n = bisect_right(self._offsets, x)
        return n, x - self._offsets[n - 1] + 1

    def less(self, x, y) -> bool:
        (i, p), (j, q) = self.locate(x), self.locate(y)
        return (i == j and p < q) or j >= i + 2

    def _down(self, x):
        n, position = self.locate(x)
        below = set(range(self.offset(n - 1))) if n >= 3 else set()
        start = self.offset(n)
        below.update(range(start, start + position - 1))
        return below

    def _minimal(self, stem, budget):
        n = 1
        while all(x in stem for x in range(self.offset(n), self.offset(n + 1))):
            n += 1
        found = []
        for chain in (n, n + 1):
            start, end = self.offset(chain), self.offset(chain + 1)
            x = start
            while x < end and x in stem:
                x += 1
            if x < end and self.down(x) <= stem:
                found.append(x)
        found = tuple(found)
        return MinimalElements(found[:budget], len(found) <= budget)

    def level_stem(self, n: int) -> frozenset:
        """
        Z_n
        """
        return frozenset(range(self.offset(n + 1)))

    def name(self, x) -> str:
        n, position = self.locate(x)
        if n == 1:
            return 'a'
        if n == 2:
            return 'b'
        return f'c{n}_{position}'

    def parse(self, name: str):
        if name == 'a':
            return 0
        if name == 'b':
            return 1
        match = NAME.match(name)
        if not match or int(match.group(1)) < 3:
            raise UsageError(f'"{name}" is not an oscillating element name ' +
                             '(a, b, c3_1, ...)')
        n, position = int(match.group(1)), int(match.group(2))
        if position > self.chain_length(n):
            raise UsageError(f'Chain C_{n} has only {self.chain_length(n)} elements')
        return self.offset(n) + position - 1

    @property
    def signature(self) -> tuple:
        return ('oscillating', self.label)


def oscillating_causet(growth: Callable = double_exponential,
                       label: str = None) -> OscillatingCauset:
    return OscillatingCauset(growth, label)
