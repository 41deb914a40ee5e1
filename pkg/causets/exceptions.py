"""
Exceptions for causets classes
"""


class CausetError(Exception):
    """
    Base class for every error raised by the causets package
    """


class UsageError(CausetError):
    """
    Raised when a command, preset, or parameter is unknown or fails
    validation before anything is computed
    """
    def __init__(self, msg):
        super().__init__(msg)


class UnknownPreset(UsageError):
    """
    Raised when a registry is asked for a preset it does not hold
    """
    def __init__(self, registry, name):
        self.registry = registry
        self.name = name
        super().__init__(f'No preset "{name}" in registry "{registry}"')


class CycleDetected(CausetError):
    """
    Raised when the cover relation given for a finite poset contains a cycle
    """
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        path = ' -> '.join(str(x) for x in self.cycle)
        super().__init__(f'Cover relation contains a cycle: {path}')


class UnknownElement(CausetError):
    """
    Raised when an element id is not part of the poset or oracle being asked
    """
    def __init__(self, element, where=None):
        self.element = element
        msg = f'Unknown element "{element}"'
        if where:
            msg += f' in {where}'
        super().__init__(msg)


class NotADownSet(CausetError):
    """
    Raised when a set is expected to be downward closed and is not
    """
    def __init__(self, members, missing=None):
        self.members = tuple(sorted(members))
        self.missing = missing
        msg = f'{list(self.members)} is not a down-set'
        if missing is not None:
            msg += f'; element "{missing}" lies below it but is not included'
        super().__init__(msg)


class NotAnOrderedStem(CausetError):
    """
    Raised when a sequence is not a linear extension of a down-set
    """
    def __init__(self, seq, position=None):
        self.seq = tuple(seq)
        self.position = position
        msg = f'{list(self.seq)} is not an ordered stem'
        if position is not None:
            msg += f' (fails at position {position})'
        super().__init__(msg)


NotAStem = NotAnOrderedStem


class ResourceLimit(CausetError):
    """
    Raised when a computation would visit more states than its budget allows
    """
    def __init__(self, budget, what='down-set states'):
        self.budget = budget
        super().__init__(f'Exceeded budget of {budget} {what}')


class CapExceeded(CausetError):
    """
    Raised when a brute-force enumeration would produce more results than the
    caller accepts
    """
    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f'{count} linear extensions exceed the cap of {cap}')


class NotExhaustive(CausetError):
    """
    Raised when an exhaustion rule stops producing strictly larger stems
    """
    def __init__(self, rule, n):
        self.rule = rule
        self.n = n
        super().__init__(f'Exhaustion "{rule}" stalls at n={n}')


class EmptySample(CausetError):
    """
    Raised when a sampled causal set has no elements
    """
    def __init__(self, intensity, horizon):
        super().__init__(f'Poisson sample with intensity {intensity} and ' +
                         f'horizon {horizon} contains no points')


class FlowViolation(CausetError):
    """
    Raised when a flow table breaks its conservation identity
    """
    def __init__(self, element, expected, got):
        self.element = element
        self.expected = expected
        self.got = got
        super().__init__(f'Flow identity fails at "{element}": expected ' +
                         f'{expected}, got {got}')


class HasMaximalElement(CausetError):
    """
    Raised when a flow puts mass on a maximal element of a forest
    """
    def __init__(self, element):
        self.element = element
        super().__init__(f'"{element}" is maximal and carries positive flow')


class SupportMismatch(CausetError):
    """
    Raised when measures that must share a causal set do not
    """
    def __init__(self, left, right):
        super().__init__(f'Measures live on different causal sets: ' +
                         f'{left} and {right}')


class TailUnbounded(CausetError):
    """
    Raised when an infinite sum or list is truncated without a usable bound
    on what was cut off
    """
    def __init__(self, what):
        super().__init__(f'No usable tail bound for {what}')


class NotAYoungDiagram(CausetError):
    """
    Raised when a set of grid cells is not closed under moving left or down
    """
    def __init__(self, cells, cell=None):
        self.cells = tuple(sorted(cells))
        msg = 'Cells do not form a Young diagram'
        if cell is not None:
            msg += f'; {cell} is missing a cell below or to its left'
        super().__init__(msg)


class ZeroProbabilityStem(CausetError):
    """
    Raised when conditioning on an ordered stem that has probability zero
    """
    def __init__(self, stem):
        self.stem = tuple(stem)
        super().__init__(f'Stem {list(self.stem)} has probability zero')


class OrderDependentStem(CausetError):
    """
    Raised when two orderings of the same stem get different probabilities
    where they must agree
    """
    def __init__(self, first, second):
        self.first = tuple(first)
        self.second = tuple(second)
        super().__init__(f'Orderings {list(self.first)} and ' +
                         f'{list(self.second)} have different probabilities')


class InconclusiveAtHorizon(CausetError):
    """
    Raised when an appearance probability cannot be settled from stems up to
    the given horizon
    """
    def __init__(self, element, horizon, estimate):
        self.element = element
        self.horizon = horizon
        self.estimate = estimate
        super().__init__(f'Appearance of "{element}" is inconclusive at ' +
                         f'horizon {horizon} (lower bound {estimate})')


class UndefinedConditioning(CausetError):
    """
    Raised when asking for a conditional measure on an event of probability
    zero
    """
    def __init__(self, element, side):
        self.element = element
        self.side = side
        super().__init__(f'Conditioning on "{element}" being {side} is ' +
                         'undefined: the event has probability zero')


class NotMaximal(CausetError):
    """
    Raised when an element must be maximal and is not
    """
    def __init__(self, element):
        self.element = element
        super().__init__(f'"{element}" is not a maximal element')
