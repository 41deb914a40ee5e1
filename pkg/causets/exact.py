"""
Exact probability values: rationals and numbers of the quadratic field
Q(sqrt 5), plus the record format used to serialize both losslessly
"""
import math
from fractions import Fraction
from numbers import Rational


class Surd5:
    """
    An element a + b*sqrt(5) of Q(sqrt 5) with rational a and b. Arithmetic is
    exact; mixing with ints and Fractions promotes them to Surd5 with b = 0

    :param a: rational part
    :param b: coefficient of sqrt(5)
    """
    __slots__ = ('_a', '_b')

    def __init__(self, a=0, b=0):
        if not isinstance(a, Rational) or not isinstance(b, Rational):
            raise TypeError(f'Surd5 parts must be rational, got ' +
                            f'{type(a)} and {type(b)}')
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Surd5):
            return value
        if isinstance(value, Rational):
            return cls(value, 0)
        raise TypeError(f'Cannot treat {type(value)} as an element of ' +
                        'Q(sqrt 5)')

    def conjugate(self):
        return Surd5(self._a, -self._b)

    def norm(self) -> Fraction:
        """
        a^2 - 5 b^2, the product with the conjugate
        """
        return self._a * self._a - 5 * self._b * self._b

    def sign(self) -> int:
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: the larger square wins
        return sa if a * a > 5 * b * b else sb

    def is_rational(self) -> bool:
        return self._b == 0

    def as_pqr(self):
        """
        Canonical integers (p, q, r) with value (p + q*sqrt 5)/r, r > 0 and
        gcd(p, q, r) = 1
        :return: tuple of three ints
        """
        r = self._a.denominator * self._b.denominator // math.gcd(
            self._a.denominator, self._b.denominator)
        p = int(self._a * r)
        q = int(self._b * r)
        g = math.gcd(math.gcd(p, q), r)
        return p // g, q // g, r // g

    def __add__(self, other):
        try:
            other = Surd5.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd5(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __neg__(self):
        return Surd5(-self._a, -self._b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        try:
            other = Surd5.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd5(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Surd5.coerce(other)
        except TypeError:
            return NotImplemented
        return Surd5(self._a * other._a + 5 * self._b * other._b,
                     self._a * other._b + self._b * other._a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = Surd5.coerce(other)
        except TypeError:
            return NotImplemented
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError('Surd5 division by zero')
        top = self * other.conjugate()
        return Surd5(top._a / norm, top._b / norm)

    def __rtruediv__(self, other):
        try:
            other = Surd5.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return Surd5(1) / (self ** -exponent)
        result, base = Surd5(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        try:
            other = Surd5.coerce(other)
        except TypeError:
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __lt__(self, other):
        try:
            return (self - Surd5.coerce(other)).sign() < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return (self - Surd5.coerce(other)).sign() <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return (self - Surd5.coerce(other)).sign() > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return (self - Surd5.coerce(other)).sign() >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def __float__(self):
        a, b = self._a, self._b
        if a == 0 or b == 0 or (a > 0) == (b > 0):
            return float(a) + float(b) * math.sqrt(5)
        # a + b*sqrt5 = norm / (a - b*sqrt5) and the denominator does not
        # cancel, so small powers of phi keep full precision
        return float(self.norm()) / (float(a) - float(b) * math.sqrt(5))

    def __repr__(self):
        return f'Surd5({self._a}, {self._b})'

    def __str__(self):
        p, q, r = self.as_pqr()
        return f'({p} + {q}*sqrt5)/{r}'


# phi = (sqrt 5 - 1)/2, the positive root of x^2 + x - 1
PHI = Surd5(Fraction(-1, 2), Fraction(1, 2))


def is_exact(value) -> bool:
    return isinstance(value, (Rational, Surd5))


def exact_float(value) -> float:
    return float(value)


def to_record(value) -> dict:
    """
    Lossless record for an exact value. Rationals become {"num", "den"} and
    Q(sqrt 5) values become {"p", "q", "r", "surd": 5}; floats are passed as
    {"float"} since they carry no exact value
    :param value: int, Fraction, Surd5 or float
    :return: dict of strings (and the surd marker)
    """
    if isinstance(value, Surd5):
        p, q, r = value.as_pqr()
        return {'p': str(p), 'q': str(q), 'r': str(r), 'surd': 5}
    if isinstance(value, Rational):
        value = Fraction(value)
        return {'num': str(value.numerator), 'den': str(value.denominator)}
    if isinstance(value, float):
        return {'float': repr(value)}
    raise TypeError(f'Cannot serialize {type(value)} as an exact value')


def parse_exact(record: dict):
    """
    Inverse of to_record
    :param record: dict produced by to_record
    :return: Fraction, Surd5 or float
    """
    if not isinstance(record, dict):
        raise TypeError(f'Exact value record must be a dict, got {type(record)}')
    if 'surd' in record:
        if int(record['surd']) != 5:
            raise ValueError(f'Unsupported surd {record["surd"]}')
        r = int(record['r'])
        return Surd5(Fraction(int(record['p']), r), Fraction(int(record['q']), r))
    if 'num' in record:
        return Fraction(int(record['num']), int(record['den']))
    if 'float' in record:
        return float(record['float'])
    raise ValueError(f'Not an exact value record: {record}')


def exact_sum(values):
    """
    Sum that starts from an exact zero so empty sums stay exact
    """
    total = Fraction(0)
    for value in values:
        total = total + value
    return total
