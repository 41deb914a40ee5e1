"""
Reading and writing the poset file format: a JSON object with "elements"
(array of integers) and "covers" (array of 2-arrays), optionally with
"labels" and a "family" field naming how an infinite causet is built from it
"""
import json
import logging

from causets.exceptions import UsageError
from causets.poset.finite import FinitePoset, build_finite_poset

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def poset_from_record(record: dict) -> FinitePoset:
    """
    :param record: dict with "elements", "covers" and optional "labels"
    :return: FinitePoset
    """
    if not isinstance(record, dict):
        raise UsageError(f'Poset record must be an object, got {type(record)}')
    missing = [field for field in ('elements', 'covers') if field not in record]
    if missing:
        raise UsageError(f'Poset record is missing {", ".join(missing)}')
    labels = {int(x): str(name) for x, name in record.get('labels', {}).items()}
    return build_finite_poset(record['elements'],
                              [tuple(pair) for pair in record['covers']], labels)


def load_poset(path: str):
    """
    Loads a poset file
    :param path: file path
    :return: (FinitePoset, family name or None)
    """
    logger.info(f'Loading poset file "{path}"')
    try:
        with open(path, 'r') as reader:
            record = json.load(reader)
    except OSError as e:
        raise UsageError(f'Cannot read poset file "{path}": {e}') from e
    except json.JSONDecodeError as e:
        raise UsageError(f'Poset file "{path}" is not valid JSON: {e}') from e
    return poset_from_record(record), record.get('family')


def dump_poset(p: FinitePoset, family: str = None) -> str:
    record = p.to_record()
    if family:
        record['family'] = family
    return json.dumps(record, sort_keys=True)
