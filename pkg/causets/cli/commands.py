"""
The commands of the causets runner. Each takes a RunConfig and returns a
report: a CheckReport, a ConvergenceReport or a plain record
"""
import logging
from collections import Counter
from fractions import Fraction

from causets.analysis.checks import (absence_bound_check, check_kolmogorov,
                                     check_order_invariance, check_order_markov,
                                     check_rank_monotonicity,
                                     first_place_bound_check)
from causets.analysis.compactness import (compactness_witness, existence_criterion,
                                          incomparability_profile)
from causets.analysis.montecarlo import essentiality_test, estimate_event
from causets.analysis.trajectory import simulate
from causets.cli.config import RunConfig
from causets.consts import (DEFAULT_ESSENTIALITY_TOL, DEFAULT_MINIMAL_BUDGET,
                            DEFAULT_STATE_BUDGET, DEFAULT_STEM_BUDGET,
                            DEFAULT_TREE_TOLERANCE)
from causets.exact import to_record
from causets.exceptions import UsageError
from causets.families.exhaustion import finite_restriction
from causets.families.grid import GridCauset
from causets.families.presets import FAMILIES, TREES
from causets.measures.derived import derived_stem_measure
from causets.measures.grid import as_shape, grid_finite_nu, hook_count
from causets.measures.limit import limit_measure_eval
from causets.measures.presets import MEASURES
from causets.measures.tree import tree_marking_sampler, tree_measure
from causets.poset.counting import count_linear_extensions, count_with_prefix
from causets.poset.io import load_poset
from causets.registry import PresetRegistry
from causets.seeding import make_rng

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

DEFAULT_LIMIT_TOL = 1e-6
DEFAULT_REPLICAS = 1000
DEFAULT_K_GRID = (10, 50, 100)

COMMANDS = PresetRegistry('command')


def build_family(config: RunConfig):
    return FAMILIES.create(config.family, **config.family_params)


def build_measure(config: RunConfig):
    mu = MEASURES.create(config.measure, **config.measure_params)
    if config.given:
        mu = derived_stem_measure(mu, mu.support.parse_stem(config.given))
    return mu


def poset_element(p, name: str):
    """
    The element of a finite poset with the given label (or id)
    """
    for x in p.elements:
        if p.name(x) == name:
            return x
    raise UsageError(f'No element named "{name}" in the poset')


def require(value, what: str, command: str):
    if value is None or value == ():
        raise UsageError(f'The {command} command needs {what}')
    return value


@COMMANDS.preset('count', 'e(P) of a poset file or of Z_n of a family exhaustion')
def count_command(config: RunConfig):
    if config.poset:
        p, _ = load_poset(config.poset)
        source = {'poset': config.poset}
    else:
        n = require(config.n, 'n', 'count')
        p = finite_restriction(build_family(config), config.exhaustion, n)
        source = {'family': config.family, 'exhaustion': config.exhaustion, 'n': n}
    budget = config.budget or DEFAULT_STATE_BUDGET
    total = count_linear_extensions(p, budget)
    record = dict(source, command='count', elements=p.n, extensions=str(total))
    if config.stem:
        stem = tuple(poset_element(p, name) for name in config.stem)
        matching = count_with_prefix(p, stem, budget)
        record.update(stem=list(config.stem), with_prefix=str(matching),
                      nu=to_record(Fraction(matching, total)))
    return record


@COMMANDS.preset('eval', 'prob of an ordered stem under a measure preset')
def eval_command(config: RunConfig):
    mu = build_measure(config)
    stem = mu.support.parse_stem(config.stem)
    value = mu.prob(stem)
    record = {'command': 'eval', 'measure': mu.name, 'stem': list(config.stem),
              'given': list(config.given), 'grade': mu.grade.value,
              'value': to_record(value), 'float': round(float(value), 12)}
    if config.replicas:
        estimate, half_width = estimate_event(mu, stem, config.replicas, config.seed,
                                              config.workers)
        record.update(estimate=estimate, half_width=half_width, seed=config.seed)
    return record


@COMMANDS.preset('limit', 'uniform measures along an exhaustion and their limit')
def limit_command(config: RunConfig):
    o = build_family(config)
    report = limit_measure_eval(o, config.exhaustion, o.parse_stem(config.stem),
                                config.n_max, config.tol or DEFAULT_LIMIT_TOL,
                                config.n_min)
    record = report.to_record()
    record.update(command='limit', family=config.family, stem=list(config.stem))
    return record


def _measure_check(check):
    def run(config: RunConfig):
        return check(build_measure(config), config)
    return run


def _family_check(check):
    def run(config: RunConfig):
        return check(build_family(config), config)
    return run


def _element(o, config: RunConfig, prop: str):
    return o.parse(require(config.element, 'an element', prop))


PROPERTIES = {
    'kolmogorov': _measure_check(lambda mu, c: check_kolmogorov(mu, c.depth)),
    'order-invariance': _measure_check(
        lambda mu, c: check_order_invariance(mu, c.depth, c.mode)),
    'order-markov': _measure_check(lambda mu, c: check_order_markov(mu, c.depth)),
    'essentiality': _measure_check(
        lambda mu, c: essentiality_test(mu, mu.support.parse_stem(c.stem),
                                        c.replicas or DEFAULT_REPLICAS,
                                        c.k_grid or DEFAULT_K_GRID, c.seed,
                                        c.tol or DEFAULT_ESSENTIALITY_TOL, c.workers)),
    'compactness': _family_check(
        lambda o, c: compactness_witness(o, c.budget or DEFAULT_STEM_BUDGET,
                                         c.k or DEFAULT_MINIMAL_BUDGET)),
    'existence': _family_check(
        lambda o, c: existence_criterion(o, c.budget or DEFAULT_STEM_BUDGET,
                                         c.k or DEFAULT_MINIMAL_BUDGET)),
    'incomparability': _family_check(
        lambda o, c: incomparability_profile(o, require(c.n, 'n (the horizon)',
                                                        'incomparability'),
                                             require(c.k, 'k', 'incomparability'))),
    'absence-bound': _family_check(
        lambda o, c: absence_bound_check(o, _element(o, c, 'absence-bound'), c.j,
                                         require(c.n, 'n', 'absence-bound'))),
    'first-place-bound': _family_check(
        lambda o, c: first_place_bound_check(o, _element(o, c, 'first-place-bound'),
                                             require(c.n, 'n', 'first-place-bound'),
                                             require(c.bound, 'a bound',
                                                     'first-place-bound'))),
}


def rank_check(config: RunConfig):
    p, _ = load_poset(require(config.poset, 'a poset file', 'rank-monotonicity'))
    name = require(config.element, 'an element', 'rank-monotonicity')
    return check_rank_monotonicity(p, poset_element(p, name))


PROPERTIES['rank-monotonicity'] = rank_check


@COMMANDS.preset('check', 'one property of a measure, family or poset')
def check_command(config: RunConfig):
    try:
        check = PROPERTIES[config.prop]
    except KeyError:
        raise UsageError(f'Unknown property "{config.prop}"; use one of ' +
                         f'{sorted(PROPERTIES)}') from None
    return check(config)


@COMMANDS.preset('simulate', 'draws the first steps of a measure\'s process')
def simulate_command(config: RunConfig):
    mu = build_measure(config)
    trajectory = simulate(mu, config.steps, config.seed)
    record = trajectory.to_record(mu.support)
    record.update(command='simulate', seed=config.seed)
    return record


@COMMANDS.preset('tree', 'existence and first-element law of a tree preset')
def tree_command(config: RunConfig):
    shape = config.shape or 'pendant-x1'
    spec = TREES.create(shape)
    result = tree_measure(spec, config.tol or DEFAULT_TREE_TOLERANCE)
    record = {'command': 'tree', 'shape': shape, 'exists': result.exists,
              'tail_sum_bound': str(result.tail_sum_bound),
              't': {name: [str(t) for t in ts]
                    for name, ts in sorted(result.t_sequences.items())}}
    if result.exists:
        mu = result.measure
        law = mu.first_element_law()
        record['first_element'] = [{'element': mu.support.name(x), **to_record(value),
                                    'float': round(float(value), 12)}
                                   for x, value in sorted(law.items())]
        if config.replicas:
            rng = make_rng(config.seed)
            counts = Counter(tree_marking_sampler(spec, rng)
                             for _ in range(config.replicas))
            record['marking'] = {mu.support.name(x): counts[x] for x in sorted(counts)}
            record['seed'] = config.seed
    return record


@COMMANDS.preset('grid', 'hook counts and stem probabilities on a Young diagram')
def grid_command(config: RunConfig):
    text = require(config.shape, 'a shape such as 3,2,1', 'grid')
    try:
        rows = [int(r) for r in str(text).split(',')]
    except ValueError:
        raise UsageError(f'A grid shape is a list of row lengths, got "{text}"') from None
    shape = as_shape(rows)
    record = {'command': 'grid', 'shape': list(shape), 'boxes': sum(shape),
              'extensions': str(hook_count(shape))}
    if config.stem:
        stem = GridCauset().parse_stem(config.stem)
        record.update(stem=list(config.stem), nu=to_record(grid_finite_nu(shape, stem)))
    return record


def run_command(config: RunConfig):
    logger.info(f'Running {config.command}')
    return COMMANDS[config.command].factory(config)
