'''
Builders for concrete permutation prefixes: Sturmian orbits, the Thue-Morse
fixed point, the two (-1/2)^n style representatives, the slow-complexity
permutation and a generic realizer for order constraints.
'''
import dataclasses
import enum
import heapq
import logging
from fractions import Fraction

from exactreal import ExactReal, ONE, ZERO, midpoint
from permutations import Representative
from sturmian import Convention, require_irrational
from util import LabException
from words import LengthOutOfRange

logger = logging.getLogger(__name__)


class NotStrictlyIncreasing(LabException):
    def __init__(self, position: int, values: tuple[int, ...]):
        super().__init__(f"n_k must be positive and strictly increasing; fails at k={position + 1}")
        self.position = position
        self.values = values


class NotEnoughTerms(LabException):
    def __init__(self, needed: int, given: int):
        super().__init__(f"{needed} terms of n_k are needed, {given} given")
        self.needed = needed


class CycleDetected(LabException):
    def __init__(self, indices: list[int]):
        super().__init__(f"Order constraints contain a cycle through {indices[:10]}")
        self.indices = indices


class Example1Variant(enum.Enum):
    A = "a"
    B = "b"


@dataclasses.dataclass(frozen=True)
class OrderConstraintSet():
    '''Pairs (i, j) meaning value_i < value_j on indices 0..size-1.'''
    size: int
    relations: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "relations", frozenset(self.relations))
        for i, j in self.relations:
            if not (0 <= i < self.size and 0 <= j < self.size):
                raise LengthOutOfRange(max(i, j), f"constraint ({i}, {j}) outside 0..{self.size - 1}")
        self.topological_order()

    def topological_order(self) -> list[int]:
        '''Kahn's order with the lowest ready index first.'''
        successors: dict[int, list[int]] = {}
        indegree = [0] * self.size
        for i, j in self.relations:
            successors.setdefault(i, []).append(j)
            indegree[j] += 1
        ready = [i for i in range(self.size) if indegree[i] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            i = heapq.heappop(ready)
            order.append(i)
            for j in successors.get(i, []):
                indegree[j] -= 1
                if indegree[j] == 0:
                    heapq.heappush(ready, j)
        if len(order) < self.size:
            raise CycleDetected(sorted(set(range(self.size)) - set(order)))
        return order


def realize(constraints: OrderConstraintSet) -> Representative:
    """
    Rational values in (0, 1) satisfying every constraint.

    Indices take the slots k/(size+1) in topological order, so the result
    depends only on the constraint set and the lowest-index tie-break.
    """
    values = [ZERO] * constraints.size
    for slot, index in enumerate(constraints.topological_order(), start=1):
        values[index] = ExactReal(slot, 0, constraints.size + 1)
    return Representative(tuple(values))


def sturmian_representative(sigma: ExactReal, rho: ExactReal = ZERO, length: int = 1,
                            convention: Convention = Convention.LOWER) -> Representative:
    '''values[n] = {rho + n*sigma}, the upper fractional part for the upper convention.'''
    sigma = require_irrational(sigma)
    rho = ExactReal.of(rho)
    sigma._field(rho)
    if length < 1:
        raise LengthOutOfRange(length, "representative length must be at least 1")
    if convention is Convention.LOWER:
        x = rho.frac()
    else:
        x = rho.frac_upper()
    values = []
    for _ in range(length):
        values.append(x)
        x = x + sigma
        if convention is Convention.LOWER and x >= ONE:
            x = x - ONE
        elif convention is Convention.UPPER and x > ONE:
            x = x - ONE
    logger.debug("sturmian representative: %d values, slope %s", length, sigma)
    return Representative(tuple(values))


_QUARTER = Fraction(1, 4)
_THREE_QUARTERS = Fraction(3, 4)


def _thue_morse_image(x: Fraction) -> tuple[Fraction, Fraction]:
    if x <= Fraction(1, 2):
        return x / 2 + _QUARTER, x / 2 + _THREE_QUARTERS
    return x / 2 + _QUARTER, x / 2 - _QUARTER


def thue_morse_representative(length: int) -> Representative:
    '''Prefix of the fixed point of the two-branch morphism on [0, 1] starting from 1/2.'''
    if length < 1:
        raise LengthOutOfRange(length, "representative length must be at least 1")
    sequence = [Fraction(1, 2)]
    while len(sequence) < length:
        sequence = [y for x in sequence for y in _thue_morse_image(x)]
    return Representative(tuple(ExactReal.of(x) for x in sequence[:length]))


def example1_representative(length: int, variant: Example1Variant = Example1Variant.A) -> Representative:
    '''(-1/2)^n for variant a, 1000 + (-1/3)^n for variant b.'''
    if length < 1:
        raise LengthOutOfRange(length, "representative length must be at least 1")
    if variant is Example1Variant.A:
        values = [Fraction(-1, 2) ** n for n in range(length)]
    else:
        values = [1000 + Fraction(-1, 3) ** n for n in range(length)]
    return Representative(tuple(ExactReal.of(v) for v in values))


def _even_value(n: int) -> Fraction:
    return Fraction(n, n + 1)


def slow_complexity_representative(nk: list[int] | tuple[int, ...], length: int) -> Representative:
    """
    Even positions 2n hold n/(n+1); odd position 2k-1 holds the midpoint of
    the values at 2n_k-2 and 2n_k.

    Odd values then increase with k and each one sits strictly between its two
    even neighbours in value, which is the whole set of order constraints.
    """
    nk = tuple(nk)
    if length < 1:
        raise LengthOutOfRange(length, "representative length must be at least 1")
    for k, n in enumerate(nk):
        if n < 1 or (k > 0 and n <= nk[k - 1]):
            raise NotStrictlyIncreasing(k, nk)
    needed = length // 2
    if len(nk) < needed:
        raise NotEnoughTerms(needed, len(nk))
    values = []
    for position in range(length):
        if position % 2 == 0:
            values.append(_even_value(position // 2))
        else:
            n = nk[(position + 1) // 2 - 1]
            values.append(midpoint(ExactReal.of(_even_value(n - 1)), ExactReal.of(_even_value(n))))
    return Representative(tuple(ExactReal.of(v) for v in values))


def slow_complexity_constraints(nk: list[int] | tuple[int, ...], length: int) -> OrderConstraintSet:
    '''The three constraint families of the slow-complexity permutation, restricted to 0..length-1.'''
    relations = set()
    for n in range(1, length):
        if 2 * n + 1 < length:
            relations.add((2 * n - 1, 2 * n + 1))
        if 2 * n + 2 < length:
            relations.add((2 * n, 2 * n + 2))
    for k, n in enumerate(nk, start=1):
        odd = 2 * k - 1
        if odd >= length:
            break
        if 2 * n - 2 < length:
            relations.add((2 * n - 2, odd))
        if 2 * n < length:
            relations.add((odd, 2 * n))
    return OrderConstraintSet(length, frozenset(relations))
