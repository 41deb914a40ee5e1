"""
Random causets from a Poisson process in a square of the positive quadrant,
ordered by the coordinate order
"""
import logging

from causets.exceptions import EmptySample
from causets.families.oracle import FiniteCauset
from causets.poset.finite import FinitePoset
from causets.seeding import make_rng

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def poisson_points(seed, intensity: float, horizon: float) -> list:
    """
    A Poisson sample in [0, horizon]^2, sorted by x + y
    :param seed: seed material or numpy Generator
    :param intensity: expected points per unit area, at least 0
    :param horizon: side of the square, positive
    :return: list of (x, y) float pairs
    """
    if intensity < 0 or horizon <= 0:
        raise ValueError(f'Need intensity >= 0 and horizon > 0, got ' +
                         f'{intensity} and {horizon}')
    rng = make_rng(seed)
    count = int(rng.poisson(intensity * horizon * horizon))
    coords = rng.uniform(0.0, horizon, size=(count, 2))
    return sorted(((float(x), float(y)) for x, y in coords),
                  key=lambda point: (point[0] + point[1], point))


def poisson_order_causet(seed, intensity: float = 10.0,
                         horizon: float = 1.0) -> FiniteCauset:
    """
    Samples the points once and returns their coordinate order as a finite
    causet named p1, p2, ... along increasing x + y
    :return: FiniteCauset
    """
    points = poisson_points(seed, intensity, horizon)
    if not points:
        raise EmptySample(intensity, horizon)
    down = {i: [j for j in range(i) if points[j][0] < points[i][0] and
                points[j][1] < points[i][1]]
            for i in range(len(points))}
    poset = FinitePoset.from_down_sets(down, {i: f'p{i + 1}' for i in down})
    logger.info(f'Sampled a Poisson causet of {poset.n} points with ' +
                f'{len(poset.covers)} covers')
    causet = FiniteCauset(poset, family='poisson')
    causet.points = tuple(points)
    return causet
