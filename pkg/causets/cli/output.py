"""
Serialization of command results. Exact values travel as integer strings and
every rendering is byte-stable for the same input
"""
import csv
import io
import json
import logging
from numbers import Rational

from causets.exact import Surd5, to_record
from causets.exceptions import UsageError

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def as_record(report) -> dict:
    """
    :param report: a dict, an exact value, or anything with to_record()
    :return: JSON-ready dict
    """
    if isinstance(report, dict):
        return report
    if isinstance(report, (Rational, Surd5, float)):
        return to_record(report)
    if hasattr(report, 'to_record'):
        return report.to_record()
    raise TypeError(f'Cannot emit {type(report)}')


def _cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True, separators=(',', ':'))
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(record: dict) -> str:
    """
    Scalar fields as key,value lines; "rows" (a list of objects) and "table"
    (a list of lists) follow as their own blocks, rows with a header
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for key in sorted(record):
        if key not in ('rows', 'table'):
            writer.writerow([key, _cell(record[key])])
    rows = record.get('rows')
    if rows:
        header = list(rows[0])
        writer.writerow([])
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row.get(column)) for column in header])
    table = record.get('table')
    if table:
        writer.writerow([])
        for row in table:
            writer.writerow([_cell(cell) for cell in row])
    return buffer.getvalue()


def emit(report, fmt: str = 'json') -> str:
    """
    Renders a result
    :param report: CheckReport, ConvergenceReport, exact value or dict
    :param fmt: "json" (sorted keys) or "csv"
    :return: text ending in a newline
    """
    record = as_record(report)
    if fmt == 'json':
        return json.dumps(record, sort_keys=True, indent=2) + '\n'
    if fmt == 'csv':
        return to_csv(record)
    raise UsageError(f'Unknown output format "{fmt}"')


def write_output(text: str, out: str = None, stream=None):
    """
    Writes to the --out path, or to the given stream
    """
    if out is None:
        stream.write(text)
        return
    logger.info(f'Writing output to "{out}"')
    try:
        with open(out, 'w', newline='') as writer:
            writer.write(text)
    except OSError as e:
        raise UsageError(f'Cannot write "{out}": {e}') from e
