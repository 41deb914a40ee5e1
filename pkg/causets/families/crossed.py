"""
Two chains b1 < b2 < ... and c0 < c1 < ... with the cross relations
c_i > b_j for j < 2^i. Every c_i sits above 2^i - 1 elements of B, which
makes all of C absent under any order-invariant measure
"""
import re

from causets.exceptions import UsageError
from causets.families.oracle import CausetOracle, MinimalElements

NAME = re.compile(r'^([bc])([0-9]+)$')


def c_id(i: int) -> int:
    return i + 2 ** i - 1


def b_id(j: int) -> int:
    return j + j.bit_length() - 1


class CrossedChains(CausetOracle):
    """
    Ids follow the natural extension that places c_i right after b_{2^i - 1}:
    c0, b1, c1, b2, b3, c2, b4, ...
    """
    family = 'crossed'

    def locate(self, x):
        """
        :return: ('c', i) or ('b', j)
        """
        self.check_element(x)
        i = 0
        while c_id(i) < x:
            i += 1
        if c_id(i) == x:
            return 'c', i
        return 'b', x - i + 1

    def element(self, chain: str, index: int) -> int:
        return c_id(index) if chain == 'c' else b_id(index)

    def less(self, x, y) -> bool:
        (cx, ix), (cy, iy) = self.locate(x), self.locate(y)
        if cx == cy:
            return ix < iy
        return cx == 'b' and ix < 2 ** iy

    def _down(self, x):
        chain, index = self.locate(x)
        if chain == 'b':
            return [b_id(j) for j in range(1, index)]
        return [c_id(i) for i in range(index)] + [b_id(j) for j in range(1, 2 ** index)]

    def _minimal(self, stem, budget):
        heights = {'b': 0, 'c': 0}
        for x in stem:
            heights[self.locate(x)[0]] += 1
        found = [b_id(heights['b'] + 1)]
        if 2 ** heights['c'] - 1 <= heights['b']:
            found.append(c_id(heights['c']))
        found = tuple(sorted(found))
        return MinimalElements(found[:budget], len(found) <= budget)

    def name(self, x) -> str:
        chain, index = self.locate(x)
        return f'{chain}{index}'

    def parse(self, name: str):
        match = NAME.match(name)
        if not match or (match.group(1) == 'b' and int(match.group(2)) < 1):
            raise UsageError(f'"{name}" is not a crossed-chains element name ' +
                             '(c0, c1, ..., b1, b2, ...)')
        return self.element(match.group(1), int(match.group(2)))

    @property
    def signature(self) -> tuple:
        return ('crossed',)


def crossed_chains_causet() -> CrossedChains:
    return CrossedChains()
