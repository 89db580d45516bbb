'''
Finite windows onto infinite permutations.

A Representative is a prefix a[0..L-1] of a sequence of pairwise distinct
exact reals.  All order questions are answered from one global rank array,
computed once with exact comparisons; window scans then work on integers.
'''
import dataclasses
import enum
import functools
import logging
from fractions import Fraction

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

import exactreal
from exactreal import ExactReal
from util import LabException
from words import ComplexityProfile, LengthMismatch, LengthOutOfRange, Period, Word

logger = logging.getLogger(__name__)


class DuplicateValue(LabException):
    def __init__(self, first: int, second: int, value: ExactReal):
        super().__init__(f"Positions {first} and {second} both hold {value}")
        self.positions = (first, second)


class IndexOutOfRange(LabException):
    def __init__(self, index: int, size: int):
        super().__init__(f"Index {index} outside 0..{size - 1}")
        self.index = index


class InvalidPattern(LabException):
    pass


class Direction(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclasses.dataclass(frozen=True)
class Pattern():
    '''A finite permutation as ranks 1..n; rank i < rank j iff value i < value j.'''
    ranks: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.ranks) != list(range(1, len(self.ranks) + 1)):
            raise InvalidPattern(f"{self.ranks} is not a permutation of 1..{len(self.ranks)}")

    def __len__(self):
        return len(self.ranks)

    def __str__(self):
        return ",".join(str(r) for r in self.ranks)


def parse_pattern(text: str) -> Pattern:
    try:
        return Pattern(tuple(int(x) for x in text.replace(" ", "").split(",")))
    except ValueError as e:
        raise InvalidPattern(f"Cannot parse pattern '{text}'") from e


@dataclasses.dataclass(frozen=True)
class Representative():
    values: tuple[ExactReal, ...]

    def __post_init__(self):
        values = tuple(ExactReal.of(v) for v in self.values)
        object.__setattr__(self, "values", values)
        seen: dict[ExactReal, int] = {}
        for i, v in enumerate(values):
            if v in seen:
                raise DuplicateValue(seen[v], i, v)
            seen[v] = i

    def __len__(self):
        return len(self.values)

    @functools.cached_property
    def order(self) -> np.ndarray:
        '''order[i] = number of values smaller than values[i].'''
        by_value = sorted(range(len(self.values)), key=self.values.__getitem__)
        order = np.empty(len(self.values), dtype=np.int64)
        order[by_value] = np.arange(len(self.values), dtype=np.int64)
        return order

    def prefix(self, length: int) -> "Representative":
        return Representative(self.values[:length])


def read_representative(lines: list[str]) -> Representative:
    return Representative(tuple(exactreal.parse(line) for line in lines))


def format_representative(rep: Representative) -> list[str]:
    return [exactreal.format_real(v) for v in rep.values]


def _pattern_from_argsort(row) -> Pattern:
    ranks = [0] * len(row)
    for rank, position in enumerate(row, start=1):
        ranks[int(position)] = rank
    return Pattern(tuple(ranks))


def _window_keys(order: np.ndarray, n: int) -> np.ndarray:
    '''Row i is the argsort of window i; equal rows exactly when the windows share a pattern.'''
    return np.argsort(sliding_window_view(order, n), axis=1)


def pattern_of(values) -> Pattern:
    rep = values if isinstance(values, Representative) else Representative(tuple(values))
    return Pattern(tuple(int(r) + 1 for r in rep.order))


def _check_window(rep: Representative, n: int):
    if not 1 <= n <= len(rep):
        raise LengthOutOfRange(n, f"window length must be in 1..{len(rep)}")


def window_patterns(rep: Representative, n: int) -> set[Pattern]:
    _check_window(rep, n)
    rows = np.unique(_window_keys(rep.order, n), axis=0)
    return {_pattern_from_argsort(row) for row in rows}


def perm_complexity_profile(rep: Representative, n_max: int) -> ComplexityProfile:
    """
    Distinct patterns among all windows rep[i..i+n-1], n = 1..n_max.

    Counts come from the prefix only and bound the infinite permutation's
    complexity from below.
    """
    _check_window(rep, n_max)
    counts = {}
    for n in range(1, n_max + 1):
        counts[n] = int(len(np.unique(_window_keys(rep.order, n), axis=0)))
    logger.debug("permutation profile over %d values up to n=%d", len(rep), n_max)
    return ComplexityProfile(len(rep), counts)


def underlying_word(rep: Representative) -> Word:
    '''Letter i is 0 when values[i] < values[i+1], else 1.'''
    if len(rep) < 2:
        raise LengthOutOfRange(len(rep), "underlying word needs at least two values")
    order = rep.order
    return ((order[1:] < order[:-1]).astype(np.uint8) + ord("0")).tobytes().decode("ascii")


def factor_map(rep: Representative, n: int) -> dict[Word, set[Pattern]]:
    '''Patterns of length n grouped by the underlying-word factor of length n-1 they sit on.'''
    if not 2 <= n <= len(rep):
        raise LengthOutOfRange(n, f"window length must be in 2..{len(rep)}")
    pattern_rows, pattern_ids = np.unique(_window_keys(rep.order, n), axis=0, return_inverse=True)
    letters = np.frombuffer(underlying_word(rep).encode("ascii"), dtype=np.uint8) - ord("0")
    word_rows, word_ids = np.unique(sliding_window_view(letters, n - 1), axis=0, return_inverse=True)
    pairs = np.unique(np.stack([word_ids.reshape(-1), pattern_ids.reshape(-1)], axis=1), axis=0)
    result: dict[Word, set[Pattern]] = {}
    for word_id, pattern_id in pairs:
        key = "".join(str(int(x)) for x in word_rows[word_id])
        result.setdefault(key, set()).add(_pattern_from_argsort(pattern_rows[pattern_id]))
    return result


@dataclasses.dataclass(frozen=True)
class MonotoneChain():
    indices: tuple[int, ...]
    is_monotone: bool


def _is_monotone(order: np.ndarray, indices: list[int], direction: Direction) -> bool:
    if direction is Direction.INCREASING:
        return all(order[i] < order[j] for i, j in zip(indices, indices[1:]))
    return all(order[i] > order[j] for i, j in zip(indices, indices[1:]))


def greedy_monotone_chain(rep: Representative, N: int, direction: Direction) -> MonotoneChain:
    """
    The greedy chain: start at the extremal value among the first N positions,
    then repeatedly move to the extremal value among the next N positions.

    Maxima are taken for a decreasing chain and minima for an increasing one.
    The chain stops when fewer than N positions remain.  is_monotone reports
    whether every step went the requested way.
    """
    if N < 1 or len(rep) <= N:
        raise LengthOutOfRange(N, f"N must be in 1..{len(rep) - 1}")
    order = rep.order
    pick = np.argmax if direction is Direction.DECREASING else np.argmin
    chain = [int(pick(order[:N]))]
    while chain[-1] + N <= len(order) - 1:
        start = chain[-1] + 1
        chain.append(start + int(pick(order[start:start + N])))
    return MonotoneChain(tuple(chain), _is_monotone(order, chain, direction))


def longest_monotone_chain(rep: Representative, N: int, direction: Direction) -> int:
    '''Longest value-monotone chain of positions with consecutive gaps at most N.'''
    if N < 1:
        raise LengthOutOfRange(N, "N must be at least 1")
    ranks = rep.order.tolist()
    if direction is Direction.DECREASING:
        ranks = [-r for r in ranks]
    best = [1] * len(ranks)
    for i, r in enumerate(ranks):
        b = 1
        for j in range(max(0, i - N), i):
            if ranks[j] < r and best[j] >= b:
                b = best[j] + 1
        best[i] = b
    return max(best, default=0)


@dataclasses.dataclass(frozen=True)
class Extremals():
    maximal: tuple[int, ...]
    minimal: tuple[int, ...]


def find_N_extremal(rep: Representative, N: int, strict_left: bool = False) -> Extremals:
    """
    Positions whose value beats every value within distance N.

    Only positions with a fully observed neighbourhood, N <= i <= L-1-N, are
    candidates; strict_left additionally requires i > N.
    """
    if N < 1 or len(rep) < 2 * N + 1:
        raise LengthOutOfRange(N, f"need at least {2 * N + 1} values")
    order = rep.order
    windows = sliding_window_view(order, 2 * N + 1)
    centers = order[N:len(order) - N]
    positions = np.arange(N, len(order) - N)
    keep = positions > N if strict_left else np.ones(len(positions), dtype=bool)
    maximal = positions[(centers == windows.max(axis=1)) & keep]
    minimal = positions[(centers == windows.min(axis=1)) & keep]
    return Extremals(tuple(int(i) for i in maximal), tuple(int(i) for i in minimal))


def canonical_estimate(rep: Representative, i: int) -> Fraction:
    '''#{j < L : values[j] < values[i]} / L, the truncated limit defining the canonical value.'''
    if not 0 <= i < len(rep):
        raise IndexOutOfRange(i, len(rep))
    return Fraction(int(rep.order[i]), len(rep))


def detect_perm_period(rep: Representative, t_max: int, max_preperiod: int | None = None) -> Period | None:
    """
    Smallest t <= t_max such that values[i] < values[j] iff values[i+t] < values[j+t]
    for all l <= i, j < L-t, with the smallest such preperiod l <= max_preperiod
    (default t_max).  The checked tail order[l:] must span two full periods.
    """
    order = rep.order
    size = len(order)
    if max_preperiod is None:
        max_preperiod = t_max
    for t in range(1, min(t_max, size - 2) + 1):
        head = order[:size - t]
        tail = order[t:]

        def agrees(start: int) -> bool:
            return np.array_equal(np.argsort(head[start:]), np.argsort(tail[start:]))

        hi = min(max_preperiod, size - 2 * t)
        if hi < 0 or not agrees(hi):
            continue
        lo = 0
        while lo < hi:
            mid = (lo + hi) // 2
            if agrees(mid):
                hi = mid
            else:
                lo = mid + 1
        return Period(lo, t)
    return None


def equivalent(rep_a: Representative, rep_b: Representative) -> bool:
    if len(rep_a) != len(rep_b):
        raise LengthMismatch(len(rep_a), len(rep_b), "representatives differ in length")
    return bool(np.array_equal(rep_a.order, rep_b.order))


@dataclasses.dataclass(frozen=True)
class LowerBoundWitness():
    index: int
    patterns: tuple[Pattern, ...]


def lower_bound_witness(rep: Representative, n: int) -> LowerBoundWitness | None:
    """
    An n-maximal element and the n windows of length n that contain it.

    The maximum sits at a different offset in each window, so the n patterns
    are pairwise distinct.  None when the prefix has no n-maximal element.
    """
    maximal = find_N_extremal(rep, n).maximal
    if not maximal:
        return None
    i = maximal[0]
    keys = _window_keys(rep.order, n)
    patterns = tuple(_pattern_from_argsort(keys[start]) for start in range(i - n + 1, i + 1))
    return LowerBoundWitness(i, patterns)
