"""
The lazily evaluated causal set interface shared by every family, plus the
finite-causet and stem-deletion wrappers
"""
import logging
import operator
import threading
from collections.abc import Iterable
from typing import NamedTuple

from cachetools import LRUCache, cachedmethod

from causets.consts import DEFAULT_MINIMAL_BUDGET
from causets.exceptions import (NotADownSet, NotAnOrderedStem, UnknownElement,
                                UsageError)
from causets.poset.finite import FinitePoset

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class MinimalElements(NamedTuple):
    """
    Minimal elements after a stem, in id order. When exhaustive is False the
    true set is larger (possibly infinite) and elements is its first part
    """
    elements: tuple
    exhaustive: bool


class CausetOracle:
    """
    A causal set given by queries instead of a stored relation. Element ids
    are non-negative ints assigned by a canonical enumeration in which every
    prefix is a stem, so enumerate(n) is always a natural extension prefix

    Subclasses implement less, _down, _minimal, name, parse and signature
    """
    family = 'causet'
    size = None

    def __init__(self):
        self._down_cache = LRUCache(maxsize=8192)
        self._down_lock = threading.RLock()

    def less(self, x, y) -> bool:
        raise NotImplementedError

    def _down(self, x) -> Iterable:
        raise NotImplementedError

    def _minimal(self, stem: frozenset, budget: int) -> MinimalElements:
        raise NotImplementedError

    def name(self, x) -> str:
        return str(x)

    def parse(self, name: str):
        try:
            x = int(name)
        except ValueError:
            raise UsageError(f'Unknown element name "{name}" for ' +
                             f'{self.family}') from None
        self.check_element(x)
        return x

    @property
    def signature(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        if not isinstance(other, CausetOracle):
            return NotImplemented
        return self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        return f'{type(self).__name__}{self.signature[1:]}'

    def __str__(self):
        return self.family

    def contains(self, x) -> bool:
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            return False
        return self.size is None or x < self.size

    def check_element(self, x):
        if not self.contains(x):
            raise UnknownElement(x, self.family)
        return x

    @cachedmethod(operator.attrgetter('_down_cache'),
                  lock=operator.attrgetter('_down_lock'))
    def down(self, x) -> frozenset:
        """
        D(x), the finite set of elements strictly below x
        """
        self.check_element(x)
        return frozenset(self._down(x))

    def is_maximal(self, x) -> bool:
        return False

    def enumerate(self, n: int) -> tuple:
        """
        The first n elements of the canonical enumeration
        """
        if self.size is not None:
            n = min(n, self.size)
        return tuple(range(n))

    def check_stem(self, seq: Iterable) -> frozenset:
        """
        Validates an ordered stem
        :param seq: sequence of element ids
        :return: the stem's underlying set
        """
        seq = tuple(seq)
        seen = set()
        for position, x in enumerate(seq):
            if not self.contains(x) or x in seen or not self.down(x) <= seen:
                raise NotAnOrderedStem(seq, position)
            seen.add(x)
        return frozenset(seen)

    def is_stem(self, seq: Iterable) -> bool:
        try:
            self.check_stem(seq)
        except NotAnOrderedStem:
            return False
        return True

    def check_down_set(self, ids: Iterable) -> frozenset:
        ids = frozenset(ids)
        for x in ids:
            self.check_element(x)
            missing = self.down(x) - ids
            if missing:
                raise NotADownSet(ids, min(missing))
        return ids

    def minimal_after(self, stem: Iterable = (),
                      budget: int = DEFAULT_MINIMAL_BUDGET) -> MinimalElements:
        """
        Minimal elements of the causet with the stem removed. A list or tuple
        is validated as an ordered stem, any other collection as a down-set
        :param stem: ordered stem or down-set
        :param budget: maximum number of elements listed
        :return: MinimalElements
        """
        if isinstance(stem, (list, tuple)):
            stem = self.check_stem(stem)
        else:
            stem = self.check_down_set(stem)
        return self._minimal(stem, budget)

    def extensions_first(self, stem: frozenset, budget: int) -> MinimalElements:
        """
        minimal_after without validation, for callers that grow stems one
        element at a time
        """
        return self._minimal(stem, budget)

    def restrict(self, ids: Iterable) -> FinitePoset:
        """
        The finite restriction P_ids as a FinitePoset labelled with names
        """
        ids = frozenset(ids)
        down = {x: self.down(x) & ids for x in ids}
        return FinitePoset.from_down_sets(down, {x: self.name(x) for x in ids})

    def level_stem(self, n: int) -> frozenset:
        """
        The n-th stem of the family's own exhaustion, where it has one
        """
        raise UsageError(f'Family "{self.family}" has no level exhaustion')

    def names(self, seq: Iterable) -> list:
        return [self.name(x) for x in seq]

    def parse_stem(self, names: Iterable) -> tuple:
        return tuple(self.parse(name) for name in names)


class FiniteCauset(CausetOracle):
    """
    A finite poset presented through the oracle interface. Ids are
    renumbered along the poset's canonical linear extension so prefixes of
    the enumeration are stems

    :param poset: the FinitePoset
    :param family: display name of the family
    """
    def __init__(self, poset: FinitePoset, family: str = 'finite'):
        super().__init__()
        self.family = family
        order = poset.canonical_extension()
        self._source = tuple(order)
        self._ids = {x: i for i, x in enumerate(order)}
        self._poset = FinitePoset.from_down_sets(
            {self._ids[x]: [self._ids[y] for y in poset.down(x)] for x in order},
            {self._ids[x]: poset.name(x) for x in order})
        self.size = poset.n

    @property
    def poset(self) -> FinitePoset:
        return self._poset

    def source_id(self, x):
        return self._source[x]

    def less(self, x, y) -> bool:
        return self._poset.less(self.check_element(x), self.check_element(y))

    def _down(self, x):
        return self._poset.down(x)

    def _minimal(self, stem, budget):
        mask = self._poset.mask(stem)
        found = self._poset.members(self._poset.available(mask))
        return MinimalElements(found[:budget], len(found) <= budget)

    def is_maximal(self, x) -> bool:
        return self._poset.is_maximal(self.check_element(x))

    def name(self, x) -> str:
        return self._poset.name(x)

    def parse(self, name: str):
        for x in self._poset.elements:
            if self._poset.name(x) == name:
                return x
        return super().parse(name)

    @property
    def signature(self) -> tuple:
        return ('finite', self._poset.elements, self._poset.covers)


class DeletedStem(CausetOracle):
    """
    P minus a stem A. Elements keep their ids in the original causet

    :param base: the original oracle
    :param stem: ordered stem of base
    """
    def __init__(self, base: CausetOracle, stem: Iterable):
        super().__init__()
        self.base = base
        self.stem = tuple(stem)
        self.removed = base.check_stem(self.stem)
        self.family = f"{base.family}\\stem"
        self._finite_size = None if base.size is None else base.size - len(self.removed)

    def contains(self, x) -> bool:
        return self.base.contains(x) and x not in self.removed

    def less(self, x, y) -> bool:
        return self.base.less(self.check_element(x), self.check_element(y))

    def _down(self, x):
        return self.base.down(x) - self.removed

    def _minimal(self, stem, budget):
        return self.base.extensions_first(stem | self.removed, budget)

    def is_maximal(self, x) -> bool:
        return self.base.is_maximal(x)

    def enumerate(self, n: int) -> tuple:
        if self._finite_size is not None:
            n = min(n, self._finite_size)
        wanted = n + len(self.removed)
        if self.base.size is not None:
            wanted = min(wanted, self.base.size)
        return tuple(x for x in self.base.enumerate(wanted)
                     if x not in self.removed)[:n]

    def name(self, x) -> str:
        return self.base.name(x)

    def parse(self, name: str):
        x = self.base.parse(name)
        return self.check_element(x)

    def level_stem(self, n: int) -> frozenset:
        return self.base.level_stem(n) - self.removed

    @property
    def signature(self) -> tuple:
        return ('deleted', self.base.signature, tuple(sorted(self.removed)))


def delete_stem(o: CausetOracle, a: Iterable) -> CausetOracle:
    """
    The causet P minus the stem a; deleting nothing returns o itself
    :param o: oracle
    :param a: ordered stem of o
    :return: CausetOracle
    """
    a = tuple(a)
    if not a:
        return o
    logger.debug(f'Deleting stem {o.names(a)} from {o.family}')
    return DeletedStem(o, a)
