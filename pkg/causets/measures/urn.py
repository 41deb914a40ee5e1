"""
Polya urn measures on two disjoint chains: after a stem with m elements of
B among n, the next element comes from B with probability
(m + alpha)/(n + alpha + beta). This is the mixture of the measures mu_q
over q drawn from Beta(alpha, beta)
"""
import math
from fractions import Fraction

from causets.exceptions import UsageError
from causets.families.forest import DisjointChains
from causets.measures.base import Grade, OIMeasure, Stepper, Transition


def beta_ratio(l: int, k: int, alpha: int = 1, beta: int = 1) -> Fraction:
    """
    B(l + alpha, k - l + beta) / B(alpha, beta) for integer alpha, beta:
    the probability of any ordered stem with l elements of B among k
    """
    def beta_fn(x, y):
        return Fraction(math.factorial(x - 1) * math.factorial(y - 1),
                        math.factorial(x + y - 1))
    return beta_fn(l + alpha, k - l + beta) / beta_fn(alpha, beta)


class UrnMeasure(OIMeasure):
    """
    :param alpha: initial B weight, a positive int
    :param beta: initial C weight, a positive int
    """

    def __init__(self, alpha: int = 1, beta: int = 1):
        for value in (alpha, beta):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise UsageError(f'Urn weights must be positive integers, got {value!r}')
        super().__init__(DisjointChains(2), 'urn' if alpha == beta == 1 else
                         f'urn({alpha},{beta})', Grade.EXACT_RATIONAL)
        self.alpha = alpha
        self.beta = beta

    def counts(self, taken) -> tuple:
        """
        (m, n): elements of B and elements in total
        """
        heights = self.support.heights(taken)
        return heights.get(0, 0), len(taken)

    def b_weight(self, m: int, n: int) -> Fraction:
        return Fraction(m + self.alpha, n + self.alpha + self.beta)

    def _weight(self, seq, taken, x):
        w = self.b_weight(*self.counts(taken))
        chain, _ = self.support.locate(x)
        return w if chain == 0 else 1 - w

    def _prob(self, seq, taken):
        m, n = self.counts(taken)
        return beta_ratio(m, n, self.alpha, self.beta)

    def appearance(self, b):
        self.support.check_element(b)
        return Fraction(1)

    def stepper(self):
        return UrnStepper(self)


class UrnStepper(Stepper):
    """
    Tracks only the chain heights
    """

    def __init__(self, measure: UrnMeasure):
        super().__init__(measure)
        self.m = 0
        self.n = 0

    def transition(self, budget=None) -> Transition:
        chains = self.measure.support
        w = self.measure.b_weight(self.m, self.n)
        b = chains.element(0, self.m + 1)
        c = chains.element(1, self.n - self.m + 1)
        if b < c:
            return Transition((b, c), (w, 1 - w), True, 0)
        return Transition((c, b), (1 - w, w), True, 0)

    def push(self, x):
        self.seq.append(x)
        chain, _ = self.measure.support.locate(x)
        self.m += chain == 0
        self.n += 1


def urn_measure(alpha: int = 1, beta: int = 1) -> UrnMeasure:
    return UrnMeasure(alpha, beta)


def two_chain_nu(m: int, n: int, l: int, k: int) -> Fraction:
    """
    nu^X(E(s)) for a stem X of two chains with m elements of B among n, and
    an ordered stem s inside X with l elements of B among k
    """
    if not 0 <= l <= k <= n or not 0 <= m <= n:
        raise UsageError(f'Invalid two-chain counts m={m}, n={n}, l={l}, k={k}')
    return Fraction(math.comb(n - k, m - l) if 0 <= m - l <= n - k else 0,
                    math.comb(n, m))
