"""
The two-dimensional grid N x N with (a,b) <= (c,d) when a <= c and b <= d.
Cells are numbered along anti-diagonals: (a,b) has id d(d+1)/2 + b with
d = a + b
"""
import math
import re
from collections.abc import Iterable

from causets.exceptions import NotAYoungDiagram, UsageError
from causets.families.oracle import CausetOracle, MinimalElements

NAME = re.compile(r'^\(\s*([0-9]+)\s*,\s*([0-9]+)\s*\)$')


def cell_id(a: int, b: int) -> int:
    d = a + b
    return d * (d + 1) // 2 + b


def cell_of(x: int) -> tuple:
    d = (math.isqrt(8 * x + 1) - 1) // 2
    b = x - d * (d + 1) // 2
    return d - b, b


def shape_of(cells: Iterable) -> tuple:
    """
    Row lengths of a set of cells that must form a Young diagram; row a holds
    the cells (a, 0), (a, 1), ...
    :param cells: iterable of (a, b) pairs
    :return: non-increasing tuple of row lengths
    """
    cells = set(tuple(c) for c in cells)
    for a, b in cells:
        if a < 0 or b < 0:
            raise NotAYoungDiagram(cells, (a, b))
        if (a > 0 and (a - 1, b) not in cells) or (b > 0 and (a, b - 1) not in cells):
            raise NotAYoungDiagram(cells, (a, b))
    rows = []
    while True:
        length = sum(1 for a, _ in cells if a == len(rows))
        if not length:
            return tuple(rows)
        rows.append(length)


def cells_of(shape: Iterable[int]) -> list:
    """
    Cells of the Young diagram with the given row lengths
    """
    shape = tuple(shape)
    if any(r < 0 for r in shape) or any(x < y for x, y in zip(shape, shape[1:])):
        raise NotAYoungDiagram((), None)
    return [(a, b) for a, length in enumerate(shape) for b in range(length)]


class GridCauset(CausetOracle):
    """
    Down-sets of the grid are Young diagrams and the minimal elements after
    one are its addable corners, so every answer is finite
    """
    family = 'grid'

    def less(self, x, y) -> bool:
        (a, b), (c, d) = cell_of(self.check_element(x)), cell_of(self.check_element(y))
        return a <= c and b <= d and (a, b) != (c, d)

    def _down(self, x):
        a, b = cell_of(x)
        return [cell_id(i, j) for i in range(a + 1) for j in range(b + 1)
                if (i, j) != (a, b)]

    def _minimal(self, stem, budget):
        rows = {}
        for x in stem:
            a, _ = cell_of(x)
            rows[a] = rows.get(a, 0) + 1
        found = []
        a = 0
        while True:
            length = rows.get(a, 0)
            if a == 0 or rows.get(a - 1, 0) > length:
                found.append(cell_id(a, length))
            if not length:
                break
            a += 1
        found = tuple(sorted(found))
        return MinimalElements(found[:budget], len(found) <= budget)

    def cell(self, x) -> tuple:
        return cell_of(self.check_element(x))

    def square_stem(self, n: int) -> frozenset:
        """
        The n x n square [0,n) x [0,n)
        """
        return frozenset(cell_id(a, b) for a in range(n) for b in range(n))

    def level_stem(self, n: int) -> frozenset:
        return self.square_stem(n)

    def name(self, x) -> str:
        a, b = self.cell(x)
        return f'({a},{b})'

    def parse(self, name: str):
        match = NAME.match(name)
        if not match:
            raise UsageError(f'"{name}" is not a grid cell name like (2,0)')
        return cell_id(int(match.group(1)), int(match.group(2)))

    @property
    def signature(self) -> tuple:
        return ('grid',)


def grid_causet() -> GridCauset:
    return GridCauset()
