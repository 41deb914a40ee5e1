"""
Finite labelled posets with their full order relation, built from covers
"""
import logging
import operator
import threading
from collections.abc import Iterable

import networkx as nx
from cachetools import LRUCache, cachedmethod
from frozendict import frozendict

from causets.consts import DEFAULT_STATE_BUDGET
from causets.exceptions import (CycleDetected, NotADownSet, NotAnOrderedStem,
                                UnknownElement)
from causets.poset.lattice import DownSetLattice, count_paths, iter_bits

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class FinitePoset:
    """
    An immutable finite strict partial order. Elements are non-negative int
    ids; the relation is stored as one bitmask per element of the elements
    strictly below it (and above it), indexed by position in sorted id order

    Use build_finite_poset (from covers) or FinitePoset.from_down_sets (from
    a known order) rather than calling the constructor directly

    :param elements: sorted tuple of element ids
    :param below: tuple of masks, below[i] = positions strictly below i
    :param labels: optional mapping id -> display name
    """
    def __init__(self, elements: tuple, below: tuple, labels=None):
        self._elements = tuple(elements)
        self._index = frozendict({x: i for i, x in enumerate(self._elements)})
        self._below = tuple(below)
        above = [0] * len(self._elements)
        for i, lower in enumerate(self._below):
            for j in iter_bits(lower):
                above[j] |= 1 << i
        self._above = tuple(above)
        # covers: x < y with nothing strictly between
        upper = [[] for _ in self._elements]
        covers = []
        for i, lower in enumerate(self._below):
            implied = 0
            for j in iter_bits(lower):
                implied |= self._below[j]
            for j in iter_bits(lower & ~implied):
                upper[j].append(i)
                covers.append((self._elements[j], self._elements[i]))
        self._upper = tuple(tuple(u) for u in upper)
        self._covers = tuple(sorted(covers))
        self._labels = frozendict(labels or {})
        self._cache = LRUCache(maxsize=256)
        self._lock = threading.RLock()

    @classmethod
    def from_down_sets(cls, down: dict, labels=None):
        """
        Builds a poset from each element's set of strictly smaller elements.
        The input must already be transitively closed
        :param down: mapping id -> iterable of ids below it
        :param labels: optional mapping id -> display name
        :return: FinitePoset
        """
        elements = tuple(sorted(down))
        index = {x: i for i, x in enumerate(elements)}
        below = []
        for x in elements:
            mask = 0
            for y in down[x]:
                if y not in index:
                    raise UnknownElement(y, 'restriction')
                mask |= 1 << index[y]
            below.append(mask)
        return cls(elements, tuple(below), labels)

    @property
    def elements(self) -> tuple:
        return self._elements

    @property
    def n(self) -> int:
        return len(self._elements)

    @property
    def covers(self) -> tuple:
        """
        Transitively irreducible cover pairs (lower, upper), sorted
        """
        return self._covers

    @property
    def reach(self) -> frozenset:
        """
        Every pair (x, y) with x < y
        """
        return frozenset((self._elements[j], y) for i, y in enumerate(self._elements)
                         for j in iter_bits(self._below[i]))

    @property
    def labels(self) -> frozendict:
        return self._labels

    def name(self, x) -> str:
        return self._labels.get(x, str(x))

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, x):
        return x in self._index

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self._elements == other._elements and self._below == other._below

    def __hash__(self):
        return hash((self._elements, self._below))

    def __repr__(self):
        return f'FinitePoset(n={self.n}, covers={list(self._covers)})'

    def position(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(x, 'poset') from None

    def mask(self, ids: Iterable) -> int:
        result = 0
        for x in ids:
            result |= 1 << self.position(x)
        return result

    def members(self, mask: int) -> tuple:
        return tuple(self._elements[i] for i in iter_bits(mask))

    def less(self, x, y) -> bool:
        return bool((self._below[self.position(y)] >> self.position(x)) & 1)

    def down(self, x) -> frozenset:
        return frozenset(self.members(self._below[self.position(x)]))

    def up(self, x) -> frozenset:
        return frozenset(self.members(self._above[self.position(x)]))

    def upper_covers(self, x) -> tuple:
        return tuple(self._elements[i] for i in self._upper[self.position(x)])

    def lower_covers(self, x) -> tuple:
        i = self.position(x)
        return tuple(self._elements[j] for j, ups in enumerate(self._upper)
                     if i in ups)

    def is_maximal(self, x) -> bool:
        return not self._above[self.position(x)]

    def maximal(self) -> tuple:
        return tuple(x for i, x in enumerate(self._elements) if not self._above[i])

    def minimal(self) -> tuple:
        return tuple(x for i, x in enumerate(self._elements) if not self._below[i])

    def is_down_set(self, ids: Iterable) -> bool:
        mask = self.mask(ids)
        return all(not self._below[i] & ~mask for i in iter_bits(mask))

    def check_down_set(self, ids: Iterable) -> int:
        """
        Validates that ids form a down-set
        :param ids: element ids
        :return: mask of the down-set
        """
        ids = tuple(ids)
        mask = self.mask(ids)
        for i in iter_bits(mask):
            missing = self._below[i] & ~mask
            if missing:
                raise NotADownSet(ids, self.members(missing)[0])
        return mask

    def check_stem(self, seq: Iterable) -> int:
        """
        Validates an ordered stem: distinct elements, each minimal among the
        elements not yet listed
        :param seq: sequence of element ids
        :return: mask of the stem's underlying set
        """
        seq = tuple(seq)
        mask = 0
        for position, x in enumerate(seq):
            if x not in self._index:
                raise NotAnOrderedStem(seq, position)
            i = self._index[x]
            if (mask >> i) & 1 or self._below[i] & ~mask:
                raise NotAnOrderedStem(seq, position)
            mask |= 1 << i
        return mask

    def is_stem(self, seq: Iterable) -> bool:
        try:
            self.check_stem(seq)
        except NotAnOrderedStem:
            return False
        return True

    def restrict(self, ids: Iterable, labels=None):
        """
        The induced suborder on ids
        :param ids: element ids to keep
        :return: FinitePoset
        """
        keep = self.mask(ids)
        down = {self._elements[i]: self.members(self._below[i] & keep)
                for i in iter_bits(keep)}
        names = labels if labels is not None else \
            {x: n for x, n in self._labels.items() if x in down}
        return FinitePoset.from_down_sets(down, names)

    def without(self, ids: Iterable):
        drop = set(ids)
        return self.restrict(x for x in self._elements if x not in drop)

    def canonical_extension(self) -> tuple:
        """
        The linear extension that always takes the smallest available id
        """
        mask, seq = 0, []
        for _ in self._elements:
            for i, lower in enumerate(self._below):
                if not (mask >> i) & 1 and not lower & ~mask:
                    mask |= 1 << i
                    seq.append(self._elements[i])
                    break
        return tuple(seq)

    @cachedmethod(operator.attrgetter('_cache'), lock=operator.attrgetter('_lock'))
    def extensions_from(self, start: int = 0,
                        budget: int = DEFAULT_STATE_BUDGET) -> int:
        """
        Number of linear extensions of the poset minus the down-set start,
        cached per poset
        :param start: down-set mask
        :param budget: DP state budget
        :return: count
        """
        return count_paths(self._below, self._above, self._upper, start, budget)

    @cachedmethod(operator.attrgetter('_cache'), lock=operator.attrgetter('_lock'),
                  key=lambda self, budget=DEFAULT_STATE_BUDGET: ('lattice', budget))
    def lattice(self, budget: int = DEFAULT_STATE_BUDGET) -> DownSetLattice:
        """
        The full down-set lattice with forward and backward counts
        """
        return DownSetLattice(self._below, self._upper, budget)

    def available(self, mask: int) -> int:
        result = 0
        for i, lower in enumerate(self._below):
            if not (mask >> i) & 1 and not lower & ~mask:
                result |= 1 << i
        return result

    def to_record(self) -> dict:
        record = {'elements': list(self._elements),
                  'covers': [list(pair) for pair in self._covers]}
        if self._labels:
            record['labels'] = {str(x): name for x, name in
                                sorted(self._labels.items())}
        return record


def build_finite_poset(elements: Iterable, covers: Iterable, labels=None) -> FinitePoset:
    """
    Builds a finite poset from its elements and cover pairs. Redundant covers
    (implied by others) are dropped with a warning; cycles are errors
    :param elements: element ids
    :param covers: pairs (lower, upper)
    :param labels: optional mapping id -> display name
    :return: FinitePoset
    """
    elements = list(elements)
    if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in elements):
        raise TypeError('Poset elements must be non-negative integers')
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    pairs = set()
    for pair in covers:
        lower, upper = tuple(pair)
        for x in (lower, upper):
            if x not in graph:
                raise UnknownElement(x, 'element list')
        if lower == upper:
            raise CycleDetected((lower, upper))
        pairs.add((lower, upper))
    graph.add_edges_from(pairs)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [edge[0] for edge in nx.find_cycle(graph)]
        raise CycleDetected(cycle + cycle[:1])
    reduced = nx.transitive_reduction(graph)
    if reduced.number_of_edges() < len(pairs):
        logger.warning(f'Dropped {len(pairs) - reduced.number_of_edges()} ' +
                       'redundant cover(s)')
    down = {x: set() for x in elements}
    for x in nx.topological_sort(reduced):
        for y in reduced.successors(x):
            down[y] |= down[x] | {x}
    poset = FinitePoset.from_down_sets(down, labels)
    logger.debug(f'Built poset with {poset.n} elements and ' +
                 f'{len(poset.covers)} covers')
    return poset


def minimal_after(p: FinitePoset, a: Iterable) -> frozenset:
    """
    Minimal elements of p with the down-set a removed
    :param p: finite poset
    :param a: down-set of p
    :return: frozenset of element ids
    """
    mask = p.check_down_set(a)
    return frozenset(p.members(p.available(mask)))


def chain(n: int, start: int = 0) -> FinitePoset:
    """
    The n-chain start < start+1 < ...
    """
    ids = range(start, start + n)
    return build_finite_poset(ids, zip(ids, ids[1:]))


def antichain(n: int, start: int = 0) -> FinitePoset:
    return build_finite_poset(range(start, start + n), ())
