"""
Check reports: the verdict of a checker together with the largest violation
it saw and the stems or pairs that caused it
"""
import logging
from enum import Enum
from fractions import Fraction
from numbers import Rational

from decorator import decorator

from causets.exact import Surd5, to_record
from causets.measures.base import Grade

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class Verdict(Enum):
    PASS = 'pass'
    FAIL = 'fail'


def _exceeds(residual, grade: Grade, tolerance=None) -> bool:
    if tolerance is None:
        tolerance = grade.tolerance
    if isinstance(residual, (Rational, Surd5)) and grade.exact and not tolerance:
        return residual > 0
    return float(residual) > tolerance


class CheckReport:
    """
    Outcome of one check. Unless given explicitly the verdict is fail exactly
    when the residual exceeds the grade's tolerance; failing reports always
    carry witnesses

    :param prop: name of the checked property
    :param depth: depth or horizon the check ran to
    :param residual: largest violation found
    :param witnesses: names of violating stems, pairs or elements
    :param grade: exactness grade of the values compared
    :param failed: explicit verdict for checks not decided by a residual
    :param notes: free-form remarks (skips, truncations)
    :param table: optional rows backing the verdict
    :param tolerance: largest residual that passes; the grade's by default
    """

    def __init__(self, prop: str, depth, residual=Fraction(0), witnesses=(),
                 grade: Grade = Grade.EXACT_RATIONAL, failed: bool = None,
                 notes=(), table=(), tolerance=None):
        self.property = prop
        self.depth = depth
        self.residual = residual
        self.witnesses = tuple(witnesses)
        self.grade = grade
        self.notes = tuple(notes)
        self.table = tuple(table)
        if failed is None:
            failed = _exceeds(residual, grade, tolerance)
        if failed and not self.witnesses:
            self.witnesses = (f'residual {residual}',)
        self.verdict = Verdict.FAIL if failed else Verdict.PASS

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def __repr__(self):
        return (f'CheckReport({self.property}, depth={self.depth}, ' +
                f'{self.verdict.value}, residual={self.residual})')

    def merge(self, other):
        """
        Reports of the same property combine by the larger residual and depth
        and the union of witnesses
        """
        if not isinstance(other, CheckReport):
            raise TypeError(f'Can only merge CheckReports, got {type(other)}')
        if other.property != self.property:
            raise ValueError(f'Cannot merge a {self.property} report with a ' +
                             f'{other.property} report')
        residual = self.residual if self.residual >= other.residual else other.residual
        witnesses = self.witnesses + tuple(w for w in other.witnesses
                                           if w not in self.witnesses)
        return CheckReport(self.property, max(self.depth, other.depth), residual,
                           witnesses if not (self.passed and other.passed) else (),
                           Grade.worst((self.grade, other.grade)),
                           not (self.passed and other.passed),
                           self.notes + other.notes, self.table + other.table)

    __add__ = merge

    def residual_record(self) -> dict:
        residual = self.residual
        if isinstance(residual, Surd5) and residual.is_rational():
            residual = residual.a
        return {f'residual_{key}': value for key, value in to_record(residual).items()
                if key != 'surd'}

    def to_record(self) -> dict:
        record = {'property': self.property, 'depth': self.depth}
        record.update(self.residual_record())
        record['verdict'] = self.verdict.value
        record['witnesses'] = list(self.witnesses)
        record['grade'] = self.grade.value
        if self.notes:
            record['notes'] = list(self.notes)
        if self.table:
            record['table'] = [list(row) for row in self.table]
        return record


@decorator
def reported(check, *args, **kwargs):
    """
    Logs every report a checker returns, failures at error level
    """
    report = check(*args, **kwargs)
    log = logger.info if report.passed else logger.error
    log(f'{report.property} to depth {report.depth}: {report.verdict.value} ' +
        f'(residual {report.residual}, {len(report.witnesses)} witness(es))')
    return report
