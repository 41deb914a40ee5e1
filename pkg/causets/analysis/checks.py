"""
Checkers for the defining properties of a measure: Kolmogorov consistency,
order-invariance and the order-Markov property, plus the rank and absence
bounds used to show an element is never chosen
"""
import logging
from fractions import Fraction

from causets.analysis.report import CheckReport, reported
from causets.consts import (DEFAULT_CHECK_BRANCH, DEFAULT_ENUMERATION_CAP,
                            DEFAULT_MINIMAL_BUDGET, DEFAULT_STEM_BUDGET)
from causets.exceptions import NotMaximal, TailUnbounded, UsageError
from causets.families.oracle import CausetOracle
from causets.families.stems import ordered_stems, orderings, stems_of_size
from causets.measures.base import OIMeasure
from causets.poset.counting import nu_uniform, rank_distribution
from causets.poset.finite import FinitePoset

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

MODES = ('full', 'adjacent')


def _largest(current, value):
    return value if value > current else current


def _label(o: CausetOracle, seq) -> str:
    return ''.join(o.names(seq)) or '()'


@reported
def check_kolmogorov(mu: OIMeasure, depth: int, branch: int = DEFAULT_CHECK_BRANCH,
                     budget: int = DEFAULT_STEM_BUDGET,
                     minimal_budget: int = DEFAULT_MINIMAL_BUDGET) -> CheckReport:
    """
    The sum of prob(s.b) over the minimal elements b after s equals prob(s),
    for every ordered stem s shorter than depth. Truncated lists must fall
    short of prob(s) by no more than prob(s) times their tail bound
    :param mu: measure
    :param depth: longest extended stem checked
    :param branch: entries kept from infinite minimal-element lists
    :param budget: maximum number of stems
    :param minimal_budget: entries listed per transition
    :return: CheckReport with residual max |sum - prob(s)| beyond the bounds
    :raises TailUnbounded: a truncated transition declares no tail bound
    """
    o = mu.support
    residual = mu.zero
    witnesses = []
    stems = ordered_stems(o, depth - 1, branch, budget) if depth > 0 else []
    for seq in stems:
        before = mu.prob(seq)
        if not before:
            # no transition law after a null stem; its extensions must be null too
            minimal = o.extensions_first(frozenset(seq), minimal_budget)
            error = mu.zero
            for x in minimal.elements:
                error = _largest(error, abs(mu.prob(seq + (x,))))
            if error > mu.tolerance:
                witnesses.append(_label(o, seq))
            residual = _largest(residual, error)
            continue
        transition = mu.transition(seq, minimal_budget)
        total = mu.zero
        for x in transition.elements:
            total = total + mu.prob(seq + (x,))
        if transition.exhaustive:
            error = abs(total - before)
        else:
            if transition.tail is None:
                raise TailUnbounded(f'the transition after {_label(o, seq)}')
            excess = total - before
            deficit = before - total - before * transition.tail
            error = _largest(_largest(mu.zero, excess), deficit)
        if error > mu.tolerance:
            witnesses.append(_label(o, seq))
        residual = _largest(residual, error)
    return CheckReport('kolmogorov', depth, residual, witnesses, mu.grade,
                       tolerance=mu.tolerance)


@reported
def check_order_invariance(mu: OIMeasure, depth: int, mode: str = 'full',
                           branch: int = DEFAULT_CHECK_BRANCH,
                           budget: int = DEFAULT_STEM_BUDGET,
                           cap: int = DEFAULT_ENUMERATION_CAP) -> CheckReport:
    """
    Every ordering of a stem of at most depth elements gets the same prob.
    The adjacent mode only swaps neighbouring incomparable elements, which
    connects all orderings of a stem
    :param mu: measure
    :param depth: largest stem size
    :param mode: "full" or "adjacent"
    :return: CheckReport with residual the largest difference found
    """
    if mode not in MODES:
        raise UsageError(f'Unknown order-invariance mode "{mode}"; use one of {MODES}')
    o = mu.support
    residual = mu.zero
    witnesses = []
    stems = ordered_stems(o, depth, branch, budget)
    if mode == 'full':
        seen = set()
        for seq in stems:
            taken = frozenset(seq)
            if len(seq) < 2 or taken in seen:
                continue
            seen.add(taken)
            values = [(other, mu.prob(other)) for other in orderings(o, taken, cap)]
            first, reference = values[0]
            for other, value in values[1:]:
                error = abs(value - reference)
                if error > mu.tolerance:
                    witnesses.append(f'{_label(o, first)} vs {_label(o, other)}')
                residual = _largest(residual, error)
    else:
        for seq in stems:
            value = mu.prob(seq)
            for i in range(len(seq) - 1):
                x, y = seq[i], seq[i + 1]
                if o.less(x, y):
                    continue
                swapped = seq[:i] + (y, x) + seq[i + 2:]
                error = abs(value - mu.prob(swapped))
                if error > mu.tolerance:
                    witnesses.append(f'{_label(o, seq)} vs {_label(o, swapped)}')
                residual = _largest(residual, error)
    return CheckReport(f'order-invariance-{mode}', depth, residual, witnesses, mu.grade,
                       tolerance=mu.tolerance)


@reported
def check_order_markov(mu: OIMeasure, depth: int, branch: int = DEFAULT_CHECK_BRANCH,
                       budget: int = DEFAULT_STEM_BUDGET,
                       cap: int = DEFAULT_ENUMERATION_CAP,
                       minimal_budget: int = DEFAULT_MINIMAL_BUDGET) -> CheckReport:
    """
    The transition law after a stem of fewer than depth elements is the same
    for every ordering of it with positive probability
    :return: CheckReport with residual the largest difference of a weight
    """
    o = mu.support
    residual = mu.zero
    witnesses = []
    seen = set()
    for seq in ordered_stems(o, depth - 1, branch, budget) if depth > 0 else []:
        taken = frozenset(seq)
        if taken in seen:
            continue
        seen.add(taken)
        laws = [(other, mu.transition(other, minimal_budget))
                for other in orderings(o, taken, cap) if mu.prob(other)]
        if len(laws) < 2:
            continue
        first, reference = laws[0]
        for other, law in laws[1:]:
            for x, w in law.items():
                expected = reference.weight_of(x)
                if expected is None:
                    continue
                error = abs(w - expected)
                if error > mu.tolerance:
                    witnesses.append(f'{_label(o, first)} vs {_label(o, other)} at {o.name(x)}')
                residual = _largest(residual, error)
    return CheckReport('order-markov', depth, residual, witnesses, mu.grade,
                       tolerance=mu.tolerance)


@reported
def check_rank_monotonicity(p: FinitePoset, x) -> CheckReport:
    """
    The probability r_i(x) that a maximal x sits at position i of a uniform
    linear extension does not decrease in i
    :raises NotMaximal: x is not maximal in p
    """
    if not p.is_maximal(x):
        raise NotMaximal(p.name(x))
    ranks = rank_distribution(p, x)
    residual = Fraction(0)
    witnesses = []
    for i, (low, high) in enumerate(zip(ranks, ranks[1:]), start=1):
        if high < low:
            witnesses.append(f'r_{i}({p.name(x)}) = {low} > r_{i + 1} = {high}')
            residual = max(residual, low - high)
    return CheckReport('rank-monotonicity', p.n, residual, witnesses,
                       table=[(i, str(r)) for i, r in enumerate(ranks, start=1)])


@reported
def absence_bound_check(family: CausetOracle, x, j: int, n: int,
                        budget: int = DEFAULT_STEM_BUDGET) -> CheckReport:
    """
    For a maximal x, r_j^W(x) <= 1/(n - j + 1) on every n-element stem W
    containing x. A non-maximal x passes vacuously with a note
    :param family: oracle with exhaustive minimal-element lists
    :param x: element id
    :param j: position from 1
    :param n: stem size
    :param budget: maximum number of stems
    """
    if not 1 <= j <= n:
        raise UsageError(f'Need 1 <= j <= n, got j={j} and n={n}')
    name = family.name(family.check_element(x))
    if not family.is_maximal(x):
        return CheckReport('absence-bound', n, notes=[f'{name} is not maximal; skipped'])
    bound = Fraction(1, n - j + 1)
    residual = Fraction(0)
    witnesses = []
    checked = 0
    for stem in stems_of_size(family, n, budget):
        if x not in stem:
            continue
        checked += 1
        value = rank_distribution(family.restrict(stem), x)[j - 1]
        if value > bound:
            witnesses.append(f'{family.names(sorted(stem))}: r_{j} = {value}')
            residual = max(residual, value - bound)
    return CheckReport('absence-bound', n, residual, witnesses,
                       notes=[f'{checked} stem(s) of size {n} contain {name}'])


@reported
def first_place_bound_check(family: CausetOracle, x, size: int, bound,
                            budget: int = DEFAULT_STEM_BUDGET) -> CheckReport:
    """
    nu^X(E(x)) <= bound for every stem X of the given size containing x: no
    finite stem makes x likely to come first
    :param family: oracle with exhaustive minimal-element lists
    :param x: element id
    :param size: stem size
    :param bound: upper bound on the first-place probability
    """
    name = family.name(family.check_element(x))
    residual = Fraction(0)
    largest = Fraction(0)
    witnesses = []
    for stem in stems_of_size(family, size, budget):
        if x not in stem or family.down(x):
            continue
        value = nu_uniform(family.restrict(stem), (x,))
        largest = max(largest, value)
        if value > bound:
            witnesses.append(f'{family.names(sorted(stem))}: {value}')
            residual = max(residual, value - bound)
    return CheckReport('first-place-bound', size, residual, witnesses,
                       notes=[f'largest first-place probability of {name}: {largest}'])
