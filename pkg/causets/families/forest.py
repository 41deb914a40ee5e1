"""
Upward-branching forests: every element has at most one lower cover, so each
element is a finite path of child indices starting at a root
"""
import heapq
import itertools
import logging
import math
import re
import threading
from collections.abc import Callable

from causets.consts import DEFAULT_SCAN_LIMIT
from causets.exceptions import UnknownElement, UsageError
from causets.families.oracle import CausetOracle, MinimalElements

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

PATH_NAME = re.compile(r'^v([0-9]+(?:\.[0-9]+)*)$')
CHAIN_NAME = re.compile(r'^x([1-9][0-9]*)_([1-9][0-9]*)$')
TWO_CHAIN_NAME = re.compile(r'^([bc])([1-9][0-9]*)$')


def path_weight(path: tuple) -> int:
    return len(path) + sum(path)


class ForestCauset(CausetOracle):
    """
    A forest given by its branching function. children(()) is the number of
    roots and children(path) the number of upper covers of the element at
    path; either may be math.inf

    Ids enumerate paths by weight (length plus sum of child indices) and then
    lexicographically. Only finitely many paths share a weight and a path
    always outweighs its prefixes, so every prefix of the enumeration is a
    stem

    :param children: callable path -> int or math.inf
    :param label: text identifying the branching function in signatures
    """
    family = 'forest'

    def __init__(self, children: Callable, label: str = 'forest'):
        super().__init__()
        self.children = children
        self.label = label
        self._paths = []
        self._ids = {}
        self._weight = 0
        self._lock = threading.RLock()

    def _weight_class(self, weight: int):
        """
        Paths of the given weight in lexicographic order
        """
        found = []
        # stack of (prefix, remaining weight, next child index)
        stack = [((), weight, 0)]
        while stack:
            prefix, remaining, child = stack.pop()
            limit = min(self.children(prefix), remaining)
            if child >= limit:
                continue
            stack.append((prefix, remaining, child + 1))
            path = prefix + (child,)
            rest = remaining - 1 - child
            if rest == 0:
                found.append(path)
            else:
                stack.append((path, rest, 0))
        return found

    def _grow(self):
        with self._lock:
            empty = 0
            while True:
                self._weight += 1
                batch = self._weight_class(self._weight)
                if batch:
                    for path in batch:
                        self._ids[path] = len(self._paths)
                        self._paths.append(path)
                    return
                empty += 1
                if empty > DEFAULT_SCAN_LIMIT:
                    raise ValueError(f'Forest "{self.label}" ran out of elements')

    def path_of(self, x) -> tuple:
        self.check_element(x)
        while len(self._paths) <= x:
            self._grow()
        return self._paths[x]

    def id_of(self, path: tuple) -> int:
        path = tuple(path)
        if not self.is_path(path):
            raise UnknownElement(path, self.family)
        while path not in self._ids:
            if self._weight >= path_weight(path):
                raise UnknownElement(path, self.family)
            self._grow()
        return self._ids[path]

    def is_path(self, path: tuple) -> bool:
        if not path:
            return False
        return all(0 <= c < self.children(path[:i]) for i, c in enumerate(path))

    def less(self, x, y) -> bool:
        px, py = self.path_of(x), self.path_of(y)
        return len(px) < len(py) and py[:len(px)] == px

    def _down(self, x):
        path = self.path_of(x)
        return [self.id_of(path[:i]) for i in range(1, len(path))]

    def is_maximal(self, x) -> bool:
        return self.children(self.path_of(x)) == 0

    def _stream(self, prefix: tuple):
        count = self.children(prefix)
        indices = itertools.count() if count == math.inf else range(count)
        return (self.id_of(prefix + (c,)) for c in indices), count == math.inf

    def _minimal(self, stem, budget):
        streams, infinite = [], False
        for prefix in [()] + [self.path_of(s) for s in stem]:
            stream, unbounded = self._stream(prefix)
            streams.append(stream)
            infinite = infinite or unbounded
        merged = (x for x in heapq.merge(*streams) if x not in stem)
        found = tuple(itertools.islice(merged, budget + 1))
        return MinimalElements(found[:budget], not infinite and len(found) <= budget)

    def name(self, x) -> str:
        return 'v' + '.'.join(str(c) for c in self.path_of(x))

    def parse(self, name: str):
        match = PATH_NAME.match(name)
        if not match:
            raise UsageError(f'"{name}" is not a forest element name (v0, v0.1, ...)')
        try:
            return self.id_of(tuple(int(c) for c in match.group(1).split('.')))
        except UnknownElement:
            raise UsageError(f'No element "{name}" in forest "{self.label}"') from None

    @property
    def signature(self) -> tuple:
        return ('forest', self.label)


class DisjointChains(ForestCauset):
    """
    k disjoint infinite chains (k may be math.inf). For finite k the ids run
    level by level across the chains; for infinitely many chains the pair
    (chain, level) is numbered along anti-diagonals

    :param k: number of chains
    """
    family = 'chains'

    def __init__(self, k=2):
        if k != math.inf and (not isinstance(k, int) or k < 1):
            raise ValueError(f'Number of chains must be a positive int or inf, got {k}')
        self.k = k
        super().__init__(lambda path: k if not path else 1, label=f'chains-{k}')

    def path_of(self, x) -> tuple:
        chain, level = self.locate(x)
        return (chain,) + (0,) * (level - 1)

    def id_of(self, path: tuple) -> int:
        path = tuple(path)
        if not self.is_path(path):
            raise UnknownElement(path, self.family)
        return self.element(path[0], len(path))

    def locate(self, x):
        """
        :return: (chain index from 0, level from 1)
        """
        self.check_element(x)
        if self.k != math.inf:
            return x % self.k, x // self.k + 1
        diagonal = (math.isqrt(8 * x + 1) - 1) // 2
        level = x - diagonal * (diagonal + 1) // 2
        return diagonal - level, level + 1

    def element(self, chain: int, level: int) -> int:
        if self.k != math.inf:
            return (level - 1) * self.k + chain
        diagonal = chain + level - 1
        return diagonal * (diagonal + 1) // 2 + level - 1

    def less(self, x, y) -> bool:
        (cx, lx), (cy, ly) = self.locate(x), self.locate(y)
        return cx == cy and lx < ly

    def _down(self, x):
        chain, level = self.locate(x)
        return [self.element(chain, l) for l in range(1, level)]

    def is_maximal(self, x) -> bool:
        return False

    def heights(self, stem) -> dict:
        """
        Number of stem elements on each chain
        """
        heights = {}
        for x in stem:
            chain, _ = self.locate(x)
            heights[chain] = heights.get(chain, 0) + 1
        return heights

    def _minimal(self, stem, budget):
        heights = self.heights(stem)
        if self.k != math.inf:
            found = tuple(sorted(self.element(c, heights.get(c, 0) + 1)
                                 for c in range(self.k)))
            return MinimalElements(found[:budget], len(found) <= budget)
        touched = [self.element(c, h + 1) for c, h in heights.items()]
        fresh = (self.element(c, 1) for c in itertools.count() if c not in heights)
        merged = heapq.merge(sorted(touched), fresh)
        return MinimalElements(tuple(itertools.islice(merged, budget)), False)

    def level_stem(self, n: int) -> frozenset:
        if self.k == math.inf:
            raise UsageError('Infinitely many chains have no level exhaustion')
        return frozenset(range(n * self.k))

    def name(self, x) -> str:
        chain, level = self.locate(x)
        if self.k == 2:
            return f'{"bc"[chain]}{level}'
        return f'x{chain + 1}_{level}'

    def parse(self, name: str):
        match = TWO_CHAIN_NAME.match(name) if self.k == 2 else None
        if match:
            return self.element('bc'.index(match.group(1)), int(match.group(2)))
        match = CHAIN_NAME.match(name)
        if not match or int(match.group(1)) > self.k:
            raise UsageError(f'"{name}" is not an element of {self.k} chains')
        return self.element(int(match.group(1)) - 1, int(match.group(2)))

    @property
    def signature(self) -> tuple:
        return ('chains', self.k)


class CountableAntichain(ForestCauset):
    """
    Infinitely many pairwise incomparable elements z1, z2, ...
    """
    family = 'antichain'

    def __init__(self):
        super().__init__(lambda path: math.inf if not path else 0, label='antichain')

    def path_of(self, x) -> tuple:
        self.check_element(x)
        return (x,)

    def id_of(self, path: tuple) -> int:
        if len(path) != 1:
            raise UnknownElement(path, self.family)
        return path[0]

    def name(self, x) -> str:
        return f'z{self.check_element(x) + 1}'

    def parse(self, name: str):
        match = re.match(r'^z([1-9][0-9]*)$', name)
        if not match:
            raise UsageError(f'"{name}" is not an antichain element name (z1, ...)')
        return int(match.group(1)) - 1


class ChainPlusPoint(ForestCauset):
    """
    An infinite chain b1 < b2 < ... and one element x incomparable to all of it
    """
    family = 'chain-point'

    def __init__(self):
        super().__init__(self._branching, label='chain-point')

    @staticmethod
    def _branching(path):
        if not path:
            return 2
        return 1 if path[0] == 0 else 0

    def name(self, x) -> str:
        path = self.path_of(x)
        return 'x' if path[0] == 1 else f'b{len(path)}'

    def parse(self, name: str):
        if name == 'x':
            return self.id_of((1,))
        match = re.match(r'^b([1-9][0-9]*)$', name)
        if not match:
            raise UsageError(f'"{name}" is not an element name (x, b1, b2, ...)')
        return self.id_of((0,) * int(match.group(1)))


def forest_causet(children: Callable, label: str = 'forest') -> ForestCauset:
    return ForestCauset(children, label)


def disjoint_chains_causet(k=2) -> DisjointChains:
    return DisjointChains(k)


def binary_tree_causet() -> ForestCauset:
    return ForestCauset(lambda path: 1 if not path else 2, label='binary')


def comb_causet() -> ForestCauset:
    """
    A spine v0 < v0.0 < v0.0.0 < ... with a separate infinite tooth starting
    above every spine element
    """
    def branching(path):
        if not path:
            return 1
        return 2 if not any(path[1:]) else 1
    return ForestCauset(branching, label='comb')
