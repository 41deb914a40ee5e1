"""
Uniform measures on Young diagrams of the grid. Extension counts come from
the hook length formula and, for skew shapes left after a stem, from
Aitken's determinant
"""
import logging
import math
from collections.abc import Iterable, Sequence
from fractions import Fraction

from causets.exceptions import NotAYoungDiagram
from causets.families.grid import GridCauset, cell_id, cell_of, cells_of, shape_of

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def as_shape(shape) -> tuple:
    """
    Row lengths of a Young diagram given either as row lengths or as cells
    :param shape: non-increasing ints, or (a, b) pairs
    :return: tuple of positive row lengths
    """
    shape = list(shape)
    if shape and all(isinstance(r, int) and not isinstance(r, bool) for r in shape):
        cells_of(shape)
        return tuple(r for r in shape if r)
    return shape_of(shape)


def hook_count(shape) -> int:
    """
    Number of standard Young tableaux of the shape: n! over the product of
    the hook lengths
    :param shape: row lengths or cells
    :return: int
    """
    rows = as_shape(shape)
    columns = [sum(1 for r in rows if r > b) for b in range(rows[0])] if rows else []
    hooks = 1
    for a, length in enumerate(rows):
        for b in range(length):
            hooks *= (length - b - 1) + (columns[b] - a - 1) + 1
    return math.factorial(sum(rows)) // hooks


def _inverse_factorial(k: int) -> Fraction:
    return Fraction(0) if k < 0 else Fraction(1, math.factorial(k))


def _determinant(matrix: list) -> Fraction:
    """
    Determinant by Gaussian elimination over the rationals
    """
    matrix = [row[:] for row in matrix]
    n = len(matrix)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if matrix[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            result = -result
        result *= matrix[col][col]
        for r in range(col + 1, n):
            factor = matrix[r][col] / matrix[col][col]
            if factor:
                for c in range(col, n):
                    matrix[r][c] -= factor * matrix[col][c]
    return result


def skew_count(shape, inner=()) -> int:
    """
    Number of standard fillings of the skew shape shape/inner, i.e. linear
    extensions of the cells of shape outside inner:
    N! det[1/(shape_i - inner_j - i + j)!]
    :param shape: row lengths or cells of the outer diagram
    :param inner: row lengths or cells of a diagram inside it
    :return: int
    :raises NotAYoungDiagram: inner does not fit inside shape
    """
    outer = as_shape(shape)
    inside = as_shape(inner) if list(inner) else ()
    if len(inside) > len(outer) or any(m > r for r, m in zip(outer, inside)):
        raise NotAYoungDiagram(cells_of(inside), None)
    if not inside:
        return hook_count(outer)
    n = len(outer)
    inside = inside + (0,) * (n - len(inside))
    matrix = [[_inverse_factorial(outer[i] - inside[j] - i + j) for j in range(n)]
              for i in range(n)]
    size = sum(outer) - sum(inside)
    value = math.factorial(size) * _determinant(matrix)
    if value.denominator != 1:
        raise ArithmeticError(f'Skew count for {outer}/{inside} is not an integer: {value}')
    return int(value)


def grid_finite_nu(shape, stem: Sequence) -> Fraction:
    """
    Probability that a uniformly random linear extension of the Young
    diagram starts with the ordered stem
    :param shape: row lengths or cells of a Young diagram
    :param stem: ordered stem of grid ids inside the diagram
    :return: Fraction
    :raises NotAYoungDiagram: shape is not a Young diagram
    """
    outer = as_shape(shape)
    taken = GridCauset().check_stem(stem)
    cells = set(cells_of(outer))
    outside = [x for x in taken if cell_of(x) not in cells]
    if outside:
        raise NotAYoungDiagram(cells, cell_of(min(outside)))
    inner = shape_of(cell_of(x) for x in taken)
    value = Fraction(skew_count(outer, inner), hook_count(outer))
    logger.debug(f'nu on shape {outer} for a stem of shape {inner}: {value}')
    return value


def young_diagrams(n: int) -> list:
    """
    Every Young diagram with n boxes, as row lengths, largest first row first
    """
    def partitions(rest: int, largest: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in partitions(rest - first, first):
                yield (first,) + tail
    return list(partitions(n, n))


def diagram_ids(shape: Iterable) -> frozenset:
    return frozenset(cell_id(a, b) for a, b in cells_of(as_shape(shape)))
