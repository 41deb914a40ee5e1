"""
Searches for stems after which a causet has infinitely (or too) many minimal
elements, and the incomparability profile behind the uniqueness results
"""
import logging
from collections import deque

from causets.analysis.report import CheckReport, reported
from causets.consts import DEFAULT_MINIMAL_BUDGET, DEFAULT_STEM_BUDGET
from causets.exceptions import UsageError
from causets.families.oracle import CausetOracle

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def _check_positive(value, what):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise UsageError(f'{what} must be a positive int, got {value!r}')


def _label(o: CausetOracle, stem) -> str:
    return '{' + ','.join(o.names(sorted(stem))) + '}'


def find_wide_stem(o: CausetOracle, stem_budget: int, k: int):
    """
    Breadth-first search over stems, smallest first
    :return: (witness stem or None, its listed minimal elements, stems visited)
    """
    seen = {frozenset()}
    queue = deque(seen)
    visited = 0
    while queue and visited < stem_budget:
        stem = queue.popleft()
        visited += 1
        minimal = o.extensions_first(stem, k + 1)
        if not minimal.exhaustive or len(minimal.elements) > k:
            return stem, minimal, visited
        for x in minimal.elements:
            grown = stem | {x}
            if grown not in seen:
                seen.add(grown)
                queue.append(grown)
    return None, None, visited


@reported
def compactness_witness(o: CausetOracle, stem_budget: int = DEFAULT_STEM_BUDGET,
                        k: int = DEFAULT_MINIMAL_BUDGET) -> CheckReport:
    """
    Looks for a stem whose complement has more than k minimal elements or
    reports a non-exhaustive list. Fails with the first such stem; running
    out of budget passes with a note, which is evidence and not proof
    :param o: oracle
    :param stem_budget: maximum number of stems visited
    :param k: largest acceptable number of minimal elements
    :return: CheckReport named compactness
    """
    _check_positive(stem_budget, 'Stem budget')
    _check_positive(k, 'K')
    stem, minimal, visited = find_wide_stem(o, stem_budget, k)
    if stem is None:
        return CheckReport('compactness', visited,
                           notes=[f'no stem among {visited} visited has more than ' +
                                  f'{k} minimal elements after it'])
    if minimal.exhaustive:
        what = f'{len(minimal.elements)} minimal elements'
    else:
        what = f'infinitely many or more than {k} minimal elements'
    return CheckReport('compactness', visited, witnesses=[f'{_label(o, stem)}: {what}'],
                       failed=True)


@reported
def existence_criterion(o: CausetOracle, stem_budget: int = DEFAULT_STEM_BUDGET,
                        k: int = DEFAULT_MINIMAL_BUDGET) -> CheckReport:
    """
    A compact infinite causet carries an order-invariant measure. Passing means
    no witness against compactness turned up within the budget; failing only
    says the criterion does not apply, as some non-compact causets still
    carry measures
    """
    report = compactness_witness(o, stem_budget, k)
    if report.passed:
        notes = report.notes + ('compact within budget: a measure exists',)
    else:
        notes = report.notes + ('not compact: existence undecided by this criterion',)
    return CheckReport('existence', report.depth, witnesses=report.witnesses,
                       failed=not report.passed, notes=notes)


def incomparable_counts(o: CausetOracle, sample) -> dict:
    """
    |I(x)| within the sample for every x in it
    """
    sample = tuple(sample)
    counts = dict.fromkeys(sample, 0)
    for i, x in enumerate(sample):
        for y in sample[i + 1:]:
            if not o.less(x, y) and not o.less(y, x):
                counts[x] += 1
                counts[y] += 1
    return counts


@reported
def incomparability_profile(o: CausetOracle, horizon: int, k: int) -> CheckReport:
    """
    Counts, for the first horizon elements, the elements of that sample
    incomparable to each. The same count at half the horizon marks an element
    whose set of incomparables looks finite. Passes iff every count is at
    most k
    :param o: oracle
    :param horizon: sample size; the enumeration prefix is a stem
    :param k: bound on |I(x)|
    :return: CheckReport with rows (element, count at horizon // 2, count, stable)
    """
    _check_positive(horizon, 'Horizon')
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise UsageError(f'k must be a non-negative int, got {k!r}')
    sample = o.enumerate(horizon)
    full = incomparable_counts(o, sample)
    half = incomparable_counts(o, sample[:horizon // 2])
    table = []
    witnesses = []
    growing = 0
    for x in sample:
        stable = x in half and half[x] == full[x]
        if x in half and not stable:
            growing += 1
        table.append((o.name(x), half.get(x), full[x], stable))
        if full[x] > k:
            witnesses.append(f'|I({o.name(x)})| = {full[x]} > {k}')
    largest = max(full.values(), default=0)
    notes = [f'largest |I(x)| = {largest}',
             f'{growing} of {len(half)} early element(s) still gain incomparables']
    return CheckReport('incomparability', len(sample), witnesses=witnesses,
                       failed=bool(witnesses), notes=notes, table=table)
