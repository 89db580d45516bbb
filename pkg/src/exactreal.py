'''
Exact real numbers of the form (a + b*sqrt(d))/c.

Every value lives in one quadratic field Q(sqrt(d)).  Ordering, floors and
fractional parts are decided with integer arithmetic only, so the coding of
a rotation orbit never depends on rounding.
'''
import dataclasses
import enum
import functools
import math
import re
import warnings
from fractions import Fraction

from util import LabException


class MixedRadicands(LabException):
    '''Two irrational values from different quadratic fields were combined.'''
    def __init__(self, d1: int, d2: int):
        super().__init__(f"Cannot combine values from Q(sqrt({d1})) and Q(sqrt({d2}))")
        self.radicands = (d1, d2)


class OutOfRange(LabException):
    def __init__(self, value: "ExactReal", message: str):
        super().__init__(f"{value}: {message}")
        self.value = value


class ExactRealSyntaxError(LabException):
    def __init__(self, text: str, message: str):
        super().__init__(f"Cannot parse exact real '{text}': {message}")
        self.text = text


class NonSquareFreeRadicand(UserWarning):
    '''A parsed radicand had a square factor and was reduced.'''


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@functools.lru_cache(maxsize=512)
def square_free_split(d: int) -> tuple[int, int]:
    '''Write d = f*f*core with core square free and return (f, core).'''
    f = 1
    core = d
    p = 2
    while p * p <= core:
        while core % (p * p) == 0:
            core //= p * p
            f *= p
        p += 1
    return f, core


@functools.total_ordering
@dataclasses.dataclass(frozen=True, eq=False, repr=False)
class ExactReal():
    '''
    The number (a + b*sqrt(d))/c.

    Components are normalized on construction: c > 0, d square free,
    gcd(a, b, c) = 1, and b = 0 exactly when d = 0.  Two values are equal
    iff their components are identical.
    '''
    a: int
    b: int = 0
    c: int = 1
    d: int = 0

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if c == 0:
            raise ZeroDivisionError("ExactReal with zero denominator")
        if d < 0:
            raise ExactRealSyntaxError(f"sqrt({d})", "negative radicand")
        if b != 0 and d > 1:
            f, d = square_free_split(d)
            b *= f
        if d == 1:
            a, b = a + b, 0
        if b == 0 or d == 0:
            b, d = 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(a, b, c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def of(cls, value: "int | Fraction | ExactReal") -> "ExactReal":
        if isinstance(value, ExactReal):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls(value.numerator, 0, value.denominator)
        raise TypeError(f"Cannot make an ExactReal from {type(value).__name__}")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def _field(self, other: "ExactReal") -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise MixedRadicands(self.d, other.d)

    #
    # Field operations
    #
    def __add__(self, other):
        try:
            y = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        d = self._field(y)
        return ExactReal(self.a * y.c + y.a * self.c, self.b * y.c + y.b * self.c, self.c * y.c, d)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return ExactReal(-self.a, -self.b, self.c, self.d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        try:
            y = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            y = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        d = self._field(y)
        return ExactReal(self.a * y.a + self.b * y.b * d, self.a * y.b + self.b * y.a, self.c * y.c, d)

    def __rmul__(self, other):
        return self * other

    def reciprocal(self) -> "ExactReal":
        if self.a == 0 and self.b == 0:
            raise ZeroDivisionError("reciprocal of zero")
        norm = self.a * self.a - self.b * self.b * self.d
        return ExactReal(self.c * self.a, -self.c * self.b, norm, self.d)

    def __truediv__(self, other):
        try:
            y = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        return self * y.reciprocal()

    def __rtruediv__(self, other):
        return ExactReal.of(other) * self.reciprocal()

    #
    # Order
    #
    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # Opposite signs: compare a^2 with b^2*d, never equal for square-free d > 1.
        lhs = a * a
        rhs = b * b * d
        if a > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactReal.of(other)
        if not isinstance(other, ExactReal):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.d))

    def __lt__(self, other):
        try:
            y = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        return compare(self, y) is Ordering.LESS

    #
    # Integer and fractional parts
    #
    def floor(self) -> int:
        if self.b == 0:
            return self.a // self.c
        m = math.isqrt(self.b * self.b * self.d)
        # b*sqrt(d) lies strictly inside (m, m+1) or (-m-1, -m).
        k = self.a + m if self.b > 0 else self.a - m - 1
        return k // self.c

    def ceil(self) -> int:
        if self.b == 0:
            return -((-self.a) // self.c)
        return self.floor() + 1

    def __floor__(self):
        return self.floor()

    def __ceil__(self):
        return self.ceil()

    def frac(self) -> "ExactReal":
        return self - self.floor()

    def frac_upper(self) -> "ExactReal":
        '''Fractional part taken in (0, 1]: integers map to 1.'''
        f = self.frac()
        if f.a == 0 and f.b == 0:
            return ONE
        return f

    def __float__(self):
        # components may be far beyond the float range while the value is not
        return float(Fraction(self.a, self.c)) + float(Fraction(self.b, self.c)) * math.sqrt(self.d)

    def __str__(self):
        return format_real(self)

    def __repr__(self):
        return f"ExactReal({format_real(self)!r})"


ZERO = ExactReal(0)
ONE = ExactReal(1)
HALF = ExactReal(1, 0, 2)


def compare(x: ExactReal, y: ExactReal) -> Ordering:
    '''Exact three-way comparison; values must share a radicand unless one is rational.'''
    x = ExactReal.of(x)
    y = ExactReal.of(y)
    x._field(y)
    s = (x - y).sign()
    if s < 0:
        return Ordering.LESS
    if s > 0:
        return Ordering.GREATER
    return Ordering.EQUAL


def floor(x: ExactReal) -> int:
    return ExactReal.of(x).floor()


def frac(x: ExactReal) -> ExactReal:
    return ExactReal.of(x).frac()


def frac_upper(x: ExactReal) -> ExactReal:
    return ExactReal.of(x).frac_upper()


def midpoint(x: ExactReal, y: ExactReal) -> ExactReal:
    return (ExactReal.of(x) + y) * HALF


@dataclasses.dataclass(frozen=True)
class ContinuedFraction():
    quotients: tuple[int, ...]
    terminated: bool = False


def cf_expansion(x: ExactReal, m: int) -> ContinuedFraction:
    """
    The first m partial quotients of x = [0; a_1, a_2, ...] for 0 < x < 1.

    A rational x stops early; the result is then flagged terminated.
    """
    x = ExactReal.of(x)
    if not (ZERO < x < ONE):
        raise OutOfRange(x, "continued fraction needs a value in (0, 1)")
    if m < 1:
        raise ValueError(f"Need at least one partial quotient, got {m}")
    quotients: list[int] = []
    terminated = False
    y = x
    while len(quotients) < m:
        y = y.reciprocal()
        q = y.floor()
        quotients.append(q)
        y = y - q
        if y.a == 0 and y.b == 0:
            terminated = True
            break
    return ContinuedFraction(tuple(quotients), terminated)


#
# Text form
#
_RATIONAL_PAT = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")
_SURD_PAT = re.compile(r"^\(([+-]?\d+)([+-])(\d+)\*sqrt\((\d+)\)\)/([+-]?\d+)$")


def parse(text: str) -> ExactReal:
    """
    Parse ``INT``, ``INT/INT`` or ``(INT OP INT*sqrt(INT))/INT``.

    Whitespace is ignored and the unicode minus is accepted.  A radicand with
    a square factor is reduced and reported with a NonSquareFreeRadicand
    warning.
    """
    compact = re.sub(r"\s+", "", text).replace("−", "-")
    M = _RATIONAL_PAT.match(compact)
    if M:
        denominator = int(M.group(2)) if M.group(2) is not None else 1
        if denominator == 0:
            raise ExactRealSyntaxError(text, "zero denominator")
        return ExactReal(int(M.group(1)), 0, denominator)
    M = _SURD_PAT.match(compact)
    if M:
        a = int(M.group(1))
        b = int(M.group(3))
        if M.group(2) == "-":
            b = -b
        d = int(M.group(4))
        c = int(M.group(5))
        if c == 0:
            raise ExactRealSyntaxError(text, "zero denominator")
        if d > 1 and square_free_split(d)[0] > 1:
            f, core = square_free_split(d)
            warnings.warn(f"sqrt({d}) reduced to {f}*sqrt({core})", NonSquareFreeRadicand, stacklevel=2)
        return ExactReal(a, b, c, d)
    raise ExactRealSyntaxError(text, "expected INT, INT/INT or (INT+INT*sqrt(INT))/INT")


def format_real(x: ExactReal) -> str:
    if x.b == 0:
        return f"{x.a}" if x.c == 1 else f"{x.a}/{x.c}"
    op = "+" if x.b > 0 else "-"
    return f"({x.a}{op}{abs(x.b)}*sqrt({x.d}))/{x.c}"
