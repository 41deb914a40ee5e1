"""
The ladder causet: a_1, a_2, ... with a_j > a_i exactly when j > i + 1.
Element a_i has id i - 1
"""
import re

from causets.exceptions import UsageError
from causets.families.oracle import CausetOracle, MinimalElements

NAME = re.compile(r'^a([1-9][0-9]*)$')


class LadderCauset(CausetOracle):
    """
    Each a_i is incomparable only with its neighbours a_{i-1} and a_{i+1}.
    Down-sets are the prefixes Z_k = {a_1..a_k} and the sets
    W_k = {a_1..a_{k-1}, a_{k+1}}
    """
    family = 'ladder'

    def less(self, x, y) -> bool:
        self.check_element(x)
        self.check_element(y)
        return y > x + 1

    def _down(self, x):
        return range(0, max(0, x - 1))

    def _minimal(self, stem, budget):
        first_missing = 0
        while first_missing in stem:
            first_missing += 1
        found = tuple(x for x in (first_missing, first_missing + 1)
                      if x not in stem)
        return MinimalElements(found[:budget], len(found) <= budget)

    def level_stem(self, n: int) -> frozenset:
        """
        The zigzag exhaustion Z_1, W_2, Z_3, W_4, ...: prefixes at odd n and
        the skip sets W_n at even n, each contained in the next
        """
        if n % 2:
            return frozenset(range(n))
        return frozenset(range(n - 1)) | {n}

    def name(self, x) -> str:
        return f'a{x + 1}'

    def parse(self, name: str):
        match = NAME.match(name)
        if not match:
            raise UsageError(f'"{name}" is not a ladder element name (a1, a2, ...)')
        return int(match.group(1)) - 1

    @property
    def signature(self) -> tuple:
        return ('ladder',)


def ladder_causet() -> LadderCauset:
    return LadderCauset()


def ladder_stem_type(stem: frozenset):
    """
    Classifies a ladder down-set
    :param stem: down-set of the ladder
    :return: ('Z', k) for a prefix of size k or ('W', k) for W_k
    """
    size = len(stem)
    if all(x < size for x in stem):
        return 'Z', size
    return 'W', size
