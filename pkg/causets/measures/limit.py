"""
Limits of uniform measures along an exhaustion: nu^{Z_n}(E(s)) evaluated
exactly for growing n and classified as converging, oscillating between even
and odd n, or inconclusive
"""
import logging
from collections.abc import Sequence
from enum import Enum
from fractions import Fraction
from statistics import fmean
from typing import NamedTuple, Optional

from causets.consts import (CONVERGENCE_WINDOW, DEFAULT_STATE_BUDGET,
                            OSCILLATION_FACTOR, OSCILLATION_WINDOW)
from causets.exact import to_record
from causets.exceptions import UsageError
from causets.families.exhaustion import exhaustion_stem
from causets.families.oracle import CausetOracle
from causets.poset.counting import nu_uniform

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class Convergence(Enum):
    CONVERGED = 'converged'
    OSCILLATING = 'oscillating'
    INCONCLUSIVE = 'inconclusive'


class ConvergenceReport(NamedTuple):
    """
    Exact values nu^{Z_n}(E(stem)) for the n at which Z_n contains the stem,
    with the verdict. limit is set when converged, gap when oscillating
    """
    rows: tuple
    verdict: Convergence
    exhaustion: str
    tol: float
    limit: Optional[Fraction] = None
    gap: Optional[float] = None

    def values(self) -> list:
        return [value for _, value in self.rows]

    def to_table(self) -> list:
        """
        Rows (n, num, den, float) with a rational value as integer strings.
        Other values keep their text form in num, with den None
        """
        table = []
        for n, value in self.rows:
            record = to_record(value)
            if 'num' in record:
                table.append((n, record['num'], record['den'], float(value)))
            else:
                table.append((n, str(value), None, float(value)))
        return table

    def to_record(self) -> dict:
        record = {'exhaustion': self.exhaustion, 'verdict': self.verdict.value,
                  'tol': self.tol,
                  'rows': [{'n': n, **to_record(value), 'float': float(value)}
                           for n, value in self.rows]}
        if self.limit is not None:
            record['limit'] = to_record(self.limit)
        if self.gap is not None:
            record['gap'] = self.gap
        return record


def classify(rows: Sequence, tol: float):
    """
    converged: the last CONVERGENCE_WINDOW values lie within tol of each
    other. oscillating: over the last OSCILLATION_WINDOW values the means at
    even and odd n differ by more than OSCILLATION_FACTOR * tol
    :param rows: (n, value) pairs in increasing n
    :param tol: tolerance
    :return: (Convergence, limit, gap)
    """
    if len(rows) >= CONVERGENCE_WINDOW:
        window = [float(v) for _, v in rows[-CONVERGENCE_WINDOW:]]
        if max(window) - min(window) <= tol:
            return Convergence.CONVERGED, rows[-1][1], None
    if len(rows) >= OSCILLATION_WINDOW:
        window = rows[-OSCILLATION_WINDOW:]
        even = [float(v) for n, v in window if n % 2 == 0]
        odd = [float(v) for n, v in window if n % 2 == 1]
        if even and odd:
            gap = abs(fmean(even) - fmean(odd))
            if gap > OSCILLATION_FACTOR * tol:
                return Convergence.OSCILLATING, None, gap
    return Convergence.INCONCLUSIVE, None, None


def limit_measure_eval(o: CausetOracle, exhaustion, stem: Sequence, n_max: int,
                       tol: float = 1e-6, n_min: int = 1,
                       budget: int = DEFAULT_STATE_BUDGET) -> ConvergenceReport:
    """
    Evaluates nu^{Z_n}(E(stem)) exactly for n_min <= n <= n_max, skipping the
    n whose Z_n does not yet contain the stem
    :param o: oracle
    :param exhaustion: exhaustion rule name or callable (oracle, n) -> stem
    :param stem: ordered stem of o
    :param n_max: largest n evaluated
    :param tol: convergence tolerance
    :param n_min: smallest n evaluated
    :param budget: DP state budget per restriction
    :return: ConvergenceReport
    :raises ResourceLimit: a restriction exceeds the state budget
    :raises NotExhaustive: the rule stalls
    """
    if n_max < n_min or n_min < 1:
        raise UsageError(f'Need 1 <= n_min <= n_max, got {n_min} and {n_max}')
    if tol <= 0:
        raise UsageError(f'Tolerance must be positive, got {tol}')
    seq = tuple(stem)
    taken = o.check_stem(seq)
    label = exhaustion if isinstance(exhaustion, str) else \
        getattr(exhaustion, '__name__', 'custom')
    rows = []
    for n in range(n_min, n_max + 1):
        z = exhaustion_stem(o, exhaustion, n)
        if not taken <= z:
            logger.debug(f'Z_{n} of "{label}" does not contain the stem yet')
            continue
        value = nu_uniform(o.restrict(z), seq, budget)
        logger.debug(f'nu^Z_{n} = {value} ({len(z)} elements)')
        rows.append((n, value))
    verdict, limit, gap = classify(rows, tol)
    logger.info(f'Limit of {o.family} along "{label}" for {o.names(seq)}: ' +
                f'{verdict.value} over {len(rows)} value(s)')
    return ConvergenceReport(tuple(rows), verdict, label, tol, limit, gap)
