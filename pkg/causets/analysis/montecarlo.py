"""
Monte-Carlo estimates of stem probabilities and the empirical essentiality
test, with replicas spread over seeded chunks
"""
import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from causets.analysis.report import CheckReport, reported
from causets.analysis.trajectory import draw_next, simulate
from causets.consts import (DEFAULT_ESSENTIALITY_TOL, DEFAULT_WORKERS,
                            REPLICA_CHUNK, SIGMA_BAND)
from causets.exceptions import UsageError
from causets.families.forest import DisjointChains
from causets.measures.base import Grade, OIMeasure
from causets.measures.urn import two_chain_nu
from causets.poset.counting import nu_uniform
from causets.seeding import make_rng, spawn_seeds

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def check_replicas(replicas):
    if isinstance(replicas, bool) or not isinstance(replicas, int) or replicas < 1:
        raise UsageError(f'Replicas must be a positive int, got {replicas!r}')


def run_chunks(work: Callable, seed, replicas: int, workers: int = DEFAULT_WORKERS) -> list:
    """
    Splits replicas into chunks of REPLICA_CHUNK with independent child
    seeds and runs work(rng, count) on each. Results come back in chunk
    order whatever the number of workers
    :param work: callable (Generator, count) -> list of per-replica results
    :param seed: parent seed material
    :param replicas: total number of replicas
    :param workers: number of threads
    :return: flat list of per-replica results
    """
    check_replicas(replicas)
    chunks = -(-replicas // REPLICA_CHUNK)
    counts = [REPLICA_CHUNK] * (chunks - 1) + [replicas - REPLICA_CHUNK * (chunks - 1)]
    seeds = spawn_seeds(seed, chunks)
    if workers > chunks:
        logger.warning(f'{workers} workers requested for {chunks} chunk(s)')
    if workers <= 1:
        parts = [work(make_rng(s), c) for s, c in zip(seeds, counts)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda args: work(make_rng(args[0]), args[1]),
                                  zip(seeds, counts)))
    return [result for part in parts for result in part]


def starts_with(mu: OIMeasure, rng, stem: tuple) -> bool:
    """
    Draws until the sequence leaves the stem or completes it
    """
    stepper = mu.stepper()
    for expected in stem:
        x = draw_next(stepper, rng)
        if x != expected:
            return False
        stepper.push(x)
    return True


def estimate_event(mu: OIMeasure, stem: Sequence, replicas: int, seed,
                   workers: int = DEFAULT_WORKERS) -> tuple:
    """
    Monte-Carlo estimate of mu.prob(stem)
    :param mu: measure
    :param stem: ordered stem
    :param replicas: number of simulated prefixes
    :param seed: seed material
    :param workers: threads
    :return: (estimate, half-width of the SIGMA_BAND sigma interval)
    """
    stem = tuple(stem)
    mu.support.check_stem(stem)

    def work(rng, count):
        return [starts_with(mu, rng, stem) for _ in range(count)]

    hits = run_chunks(work, seed, replicas, workers)
    estimate = sum(hits) / replicas
    # floored for samples that all agree
    variance = max(estimate * (1 - estimate), 1 / replicas)
    half_width = SIGMA_BAND * math.sqrt(variance / replicas)
    logger.info(f'{mu.name}: P({mu.support.names(stem)}) ~ {estimate} +- {half_width}')
    return estimate, half_width


def nu_k(mu: OIMeasure, stem: tuple, prefix: tuple) -> Fraction:
    """
    nu^{X}(E(stem)) for the set X of the given trajectory prefix
    """
    x = frozenset(prefix)
    if not frozenset(stem) <= x:
        return Fraction(0)
    support = mu.support
    if isinstance(support, DisjointChains) and support.k == 2:
        m = support.heights(x).get(0, 0)
        l = support.heights(stem).get(0, 0)
        return two_chain_nu(m, len(x), l, len(stem))
    return nu_uniform(support.restrict(x), stem)


@reported
def essentiality_test(mu: OIMeasure, stem: Sequence, replicas: int, k_grid: Sequence,
                      seed, tol: float = DEFAULT_ESSENTIALITY_TOL,
                      workers: int = DEFAULT_WORKERS) -> CheckReport:
    """
    For simulated trajectories, the uniform measure nu^k on the first k
    chosen elements should give the stem a probability tending to
    mu.prob(stem). Passes when the mean deviation at the largest k is within
    tol and does not grow from the smallest k
    :param mu: measure
    :param stem: ordered stem
    :param replicas: number of trajectories
    :param k_grid: increasing prefix lengths
    :param seed: seed material
    :param tol: allowed mean deviation at the largest k
    :param workers: threads
    :return: CheckReport with rows (k, mean nu, mean deviation, min nu, max nu)
    """
    stem = tuple(stem)
    mu.support.check_stem(stem)
    k_grid = sorted(set(int(k) for k in k_grid))
    if not k_grid or k_grid[0] < len(stem):
        raise UsageError(f'k values must be at least the stem length {len(stem)}')
    target = float(mu.prob(stem))

    def work(rng, count):
        rows = []
        for _ in range(count):
            seq = simulate(mu, k_grid[-1], rng).seq
            rows.append([float(nu_k(mu, stem, seq[:k])) for k in k_grid])
        return rows

    values = np.array(run_chunks(work, seed, replicas, workers))
    deviation = np.abs(values - target).mean(axis=0)
    table = [(k, float(values[:, i].mean()), float(deviation[i]),
              float(values[:, i].min()), float(values[:, i].max()))
             for i, k in enumerate(k_grid)]
    residual = float(deviation[-1])
    growing = len(k_grid) > 1 and deviation[-1] > deviation[0]
    witnesses = []
    if residual > tol:
        witnesses.append(f'k={k_grid[-1]}: mean |nu - prob| = {residual:.6f} > {tol}')
    if growing:
        witnesses.append(f'mean deviation grows from {deviation[0]:.6f} ' +
                         f'to {deviation[-1]:.6f}')
    above = float((values[:, -1] > target).mean())
    notes = [f'prob = {target:.6f}; {above:.3f} of trajectories end above it']
    return CheckReport('essentiality', k_grid[-1], residual, witnesses, Grade.MONTE_CARLO,
                       bool(witnesses), notes, table)
