"""
Seeded random number generation. Every random choice in the package goes
through a numpy Generator built from an explicit seed, and draws from exact
weights stay exact by working on integers
"""
import logging
import math
from fractions import Fraction
from numbers import Rational

import numpy as np
from numpy.random import Generator, SeedSequence

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

# numpy draws integers below 2**63 natively; larger bounds are assembled
# from 32-bit words
NATIVE_BOUND = 2 ** 62
WORD_BITS = 32


def make_seed(seed) -> SeedSequence:
    """
    Normalizes an int, a sequence of ints or an existing SeedSequence
    :param seed: seed material
    :return: SeedSequence
    """
    if isinstance(seed, SeedSequence):
        return seed
    if isinstance(seed, bool) or seed is None:
        raise TypeError(f'Seed must be an integer, got {seed!r}')
    if isinstance(seed, int):
        if seed < 0:
            raise ValueError(f'Seed must be non-negative, got {seed}')
        return SeedSequence(seed)
    return SeedSequence(tuple(int(s) for s in seed))


def make_rng(seed) -> Generator:
    """
    Builds a Generator from seed material; Generators are passed through
    :param seed: int, sequence of ints, SeedSequence or Generator
    :return: numpy Generator
    """
    if isinstance(seed, Generator):
        return seed
    return np.random.default_rng(make_seed(seed))


def spawn_seeds(seed, count: int) -> list:
    """
    Independent child seeds, one per replica chunk
    :param seed: parent seed material
    :param count: number of children
    :return: list of SeedSequence
    """
    return make_seed(seed).spawn(count)


def randbelow(rng: Generator, bound: int) -> int:
    """
    Exactly uniform integer in [0, bound) for arbitrarily large bounds
    :param rng: numpy Generator
    :param bound: positive int
    :return: int
    """
    if bound <= 0:
        raise ValueError(f'randbelow bound must be positive, got {bound}')
    if bound <= NATIVE_BOUND:
        return int(rng.integers(0, bound, dtype=np.int64))
    bits = bound.bit_length()
    words = -(-bits // WORD_BITS)
    excess = words * WORD_BITS - bits
    while True:
        value = 0
        for word in rng.integers(0, 2 ** WORD_BITS, size=words, dtype=np.uint64):
            value = (value << WORD_BITS) | int(word)
        value >>= excess
        if value < bound:
            return value


def draw_index(rng: Generator, weights) -> int:
    """
    Draws an index with probability proportional to its weight. Integer and
    Fraction weights are drawn exactly; anything else goes through floats
    :param rng: numpy Generator
    :param weights: sequence of non-negative weights with a positive total
    :return: chosen index
    """
    weights = list(weights)
    if not weights:
        raise ValueError('Cannot draw from an empty weight list')
    if all(isinstance(w, Rational) for w in weights):
        fractions = [Fraction(w) for w in weights]
        denominator = 1
        for w in fractions:
            denominator = denominator * w.denominator // math.gcd(denominator, w.denominator)
        ints = [int(w * denominator) for w in fractions]
        total = sum(ints)
        if total <= 0:
            raise ValueError('Weights must have a positive total')
        target = randbelow(rng, total)
        for index, w in enumerate(ints):
            if target < w:
                return index
            target -= w
    floats = [float(w) for w in weights]
    total = sum(floats)
    if total <= 0:
        raise ValueError('Weights must have a positive total')
    return pick_float(floats, rng.random() * total)


def pick_float(floats, target: float):
    """
    Index whose cumulative interval contains target, or None when target is
    past the listed mass
    :param floats: non-negative float weights
    :param target: point in [0, sum)
    :return: index or None
    """
    cumulative = 0.0
    last = None
    for index, w in enumerate(floats):
        if w <= 0:
            continue
        cumulative += w
        last = index
        if target < cumulative:
            return index
    if target < cumulative + 1e-15 * max(1.0, cumulative):
        return last
    return None
