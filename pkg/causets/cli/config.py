"""
Run configuration: one command with its family, measure and numeric
parameters, read from a JSON file and overridden by command-line flags
"""
import json
import logging
import math
import os
from collections.abc import Mapping
from fractions import Fraction
from typing import NamedTuple, Optional

from frozendict import frozendict

from causets.consts import DEFAULT_SEED, DEFAULT_WORKERS, SEED_ENV_VAR
from causets.exceptions import UsageError

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

COMMANDS = ('count', 'eval', 'limit', 'check', 'simulate', 'tree', 'grid')
FORMATS = ('json', 'csv')


def parse_value(text):
    """
    Reads a parameter value as an int, then an exact Fraction ("1/3", "0.25"),
    then a float ("inf"), falling back to the string itself
    """
    if not isinstance(text, str):
        return text
    for kind in (int, Fraction, float):
        try:
            return kind(text)
        except ValueError:
            continue
    return text


def parse_params(pairs) -> frozendict:
    """
    :param pairs: "key=value" strings, or a mapping from a config file
    :return: frozendict of parsed values
    """
    if pairs is None:
        return frozendict()
    if isinstance(pairs, Mapping):
        return frozendict({str(k): parse_value(v) for k, v in pairs.items()})
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition('=')
        if not sep or not key:
            raise UsageError(f'Parameters are given as key=value, got "{pair}"')
        params[key.strip().replace('-', '_')] = parse_value(value.strip())
    return frozendict(params)


def _stem(value) -> tuple:
    if value is None:
        return ()
    if isinstance(value, str):
        return tuple(value.split())
    return tuple(str(v) for v in value)


def _k_grid(value) -> Optional[tuple]:
    if value is None:
        return None
    if isinstance(value, str):
        value = value.split(',')
    try:
        return tuple(int(k) for k in value)
    except (TypeError, ValueError):
        raise UsageError(f'k values must be integers, got {value!r}') from None


def env_seed():
    """
    The seed from the environment variable, or DEFAULT_SEED
    """
    text = os.environ.get(SEED_ENV_VAR)
    if text is None or not text.strip():
        return DEFAULT_SEED
    try:
        return int(text)
    except ValueError:
        raise UsageError(f'{SEED_ENV_VAR} must be a non-negative integer, ' +
                         f'got "{text}"') from None


class RunConfig(NamedTuple):
    """
    Everything one run needs. Fields left as None fall back to the defaults
    of the operation they feed
    """
    command: str
    family: str = 'ladder'
    family_params: frozendict = frozendict()
    measure: str = 'ladder'
    measure_params: frozendict = frozendict()
    stem: tuple = ()
    given: tuple = ()
    element: Optional[str] = None
    poset: Optional[str] = None
    shape: Optional[str] = None
    prop: str = 'kolmogorov'
    mode: str = 'full'
    exhaustion: str = 'prefix'
    n: Optional[int] = None
    j: int = 1
    k: Optional[int] = None
    bound: object = None
    depth: int = 4
    n_min: int = 1
    n_max: int = 20
    tol: Optional[float] = None
    steps: int = 20
    replicas: Optional[int] = None
    k_grid: Optional[tuple] = None
    budget: Optional[int] = None
    seed: int = DEFAULT_SEED
    workers: int = DEFAULT_WORKERS
    format: str = 'json'
    out: Optional[str] = None
    verbose: bool = False

    @classmethod
    def from_dict(cls, values: dict):
        """
        Builds a config from plain values, as found in a config file
        :param values: dict keyed by field name; "property" is accepted for prop
        :return: validated RunConfig
        """
        values = dict(values)
        if 'property' in values:
            values['prop'] = values.pop('property')
        unknown = sorted(set(values) - set(cls._fields))
        if unknown:
            raise UsageError(f'Unknown config field(s) {unknown}')
        if 'command' not in values:
            raise UsageError('The config names no command')
        for field in ('family_params', 'measure_params'):
            if field in values:
                values[field] = parse_params(values[field])
        for field in ('stem', 'given'):
            if field in values:
                values[field] = _stem(values[field])
        if 'k_grid' in values:
            values['k_grid'] = _k_grid(values['k_grid'])
        if 'bound' in values:
            values['bound'] = parse_value(values['bound'])
        if values.get('seed') is None:
            values['seed'] = env_seed()
        return cls(**values).validate()

    def validate(self):
        """
        Checks every numeric field against what the commands accept
        :return: self
        :raises UsageError: on the first invalid field
        """
        if self.command not in COMMANDS:
            raise UsageError(f'Unknown command "{self.command}"; use one of {COMMANDS}')
        if self.format not in FORMATS:
            raise UsageError(f'Unknown format "{self.format}"; use one of {FORMATS}')
        positive = {'n': self.n, 'j': self.j, 'n_min': self.n_min, 'n_max': self.n_max,
                    'replicas': self.replicas, 'budget': self.budget,
                    'workers': self.workers}
        for name, value in positive.items():
            if value is not None and (isinstance(value, bool) or
                                      not isinstance(value, int) or value < 1):
                raise UsageError(f'{name} must be a positive integer, got {value!r}')
        for name, value in {'depth': self.depth, 'steps': self.steps, 'k': self.k,
                            'seed': self.seed}.items():
            if value is not None and (isinstance(value, bool) or
                                      not isinstance(value, int) or value < 0):
                raise UsageError(f'{name} must be a non-negative integer, got {value!r}')
        if self.n_min > self.n_max:
            raise UsageError(f'n_min {self.n_min} exceeds n_max {self.n_max}')
        if self.tol is not None and not (0 < self.tol < math.inf):
            raise UsageError(f'Tolerance must be positive, got {self.tol}')
        if self.k_grid is not None and (not self.k_grid or min(self.k_grid) < 1):
            raise UsageError(f'k values must be positive, got {self.k_grid}')
        return self

    def to_record(self) -> dict:
        record = self._asdict()
        record['family_params'] = {k: str(v) for k, v in self.family_params.items()}
        record['measure_params'] = {k: str(v) for k, v in self.measure_params.items()}
        record['stem'] = list(self.stem)
        record['given'] = list(self.given)
        record['bound'] = None if self.bound is None else str(self.bound)
        return record


def load_config(path: str) -> dict:
    """
    Reads a JSON config file
    :param path: file path
    :return: dict of raw field values
    """
    logger.info(f'Loading run config "{path}"')
    try:
        with open(path, 'r') as reader:
            values = json.load(reader)
    except OSError as e:
        raise UsageError(f'Cannot read config "{path}": {e}') from e
    except json.JSONDecodeError as e:
        raise UsageError(f'Config "{path}" is not valid JSON: {e}') from e
    if not isinstance(values, dict):
        raise UsageError(f'Config "{path}" must hold a JSON object')
    return values


def merge_config(file_values: dict, flags: dict) -> RunConfig:
    """
    Config file values overridden by every flag that was given
    :param file_values: values from load_config, or an empty dict
    :param flags: values from the command line; None means not given
    :return: validated RunConfig
    """
    values = dict(file_values)
    values.update({k: v for k, v in flags.items() if v is not None})
    return RunConfig.from_dict(values)
