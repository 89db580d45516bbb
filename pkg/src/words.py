'''
Finite binary words: factors, complexity, special factors, conjugates, periods.

A Word is a plain str over {'0', '1'}.  Everything here is computed from a
finite prefix, so a complexity profile is a lower bound on the complexity of
the infinite word it was cut from; each profile records the prefix length.
'''
import dataclasses
import logging
import re

from util import LabException

logger = logging.getLogger(__name__)

Word = str

_WORD_PAT = re.compile(r"^[01]*$")


class InvalidWord(LabException):
    def __init__(self, text: str):
        super().__init__(f"Not a binary word: {text[:40]!r}")
        self.text = text


class LengthOutOfRange(LabException):
    def __init__(self, length: int, message: str):
        super().__init__(f"Length {length}: {message}")
        self.length = length


class LengthMismatch(LabException):
    def __init__(self, left: int, right: int, message: str):
        super().__init__(f"{message} ({left} vs {right})")
        self.lengths = (left, right)


def check_word(text: str) -> Word:
    if not _WORD_PAT.match(text):
        raise InvalidWord(text)
    return text


def ones(w: Word) -> int:
    return w.count("1")


@dataclasses.dataclass(frozen=True)
class FactorSet():
    '''The distinct factors of one length.'''
    length: int
    members: frozenset[Word]

    def __len__(self):
        return len(self.members)

    def __contains__(self, w):
        return w in self.members

    def __iter__(self):
        return iter(sorted(self.members))


@dataclasses.dataclass(frozen=True)
class ComplexityProfile():
    '''Observed factor counts n -> p(n), taken over a prefix of the given length.'''
    prefix_length: int
    counts: dict[int, int]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def as_records(self) -> list[dict]:
        return [{"n": n, "count": c, "prefix_length": self.prefix_length} for n, c in sorted(self.counts.items())]


@dataclasses.dataclass(frozen=True)
class SpecialFactors():
    right: frozenset[Word]
    left: frozenset[Word]
    bispecial: frozenset[Word]


@dataclasses.dataclass(frozen=True)
class Period():
    preperiod: int
    period: int


def factors(w: Word, n: int) -> FactorSet:
    if not 0 < n <= len(w):
        raise LengthOutOfRange(n, f"factor length must be in 1..{len(w)}")
    return FactorSet(n, frozenset(w[i:i + n] for i in range(len(w) - n + 1)))


def complexity_profile(w: Word, n_max: int) -> ComplexityProfile:
    if not 1 <= n_max <= len(w):
        raise LengthOutOfRange(n_max, f"n_max must be in 1..{len(w)}")
    counts = {n: len(factors(w, n)) for n in range(1, n_max + 1)}
    logger.debug("complexity profile of %d letters up to n=%d", len(w), n_max)
    return ComplexityProfile(len(w), counts)


def special_factors(fs_n: FactorSet, fs_n1: FactorSet) -> SpecialFactors:
    '''Right-, left- and bispecial members of fs_n, judged by their extensions in fs_n1.'''
    if fs_n1.length != fs_n.length + 1:
        raise LengthMismatch(fs_n.length, fs_n1.length, "extension set must be one letter longer")
    right = frozenset(u for u in fs_n.members if u + "0" in fs_n1.members and u + "1" in fs_n1.members)
    left = frozenset(u for u in fs_n.members if "0" + u in fs_n1.members and "1" + u in fs_n1.members)
    return SpecialFactors(right, left, right & left)


def conjugates(w: Word) -> frozenset[Word]:
    if not w:
        return frozenset([w])
    return frozenset(w[i:] + w[:i] for i in range(len(w)))


def is_conjugate(u: Word, v: Word) -> bool:
    return len(u) == len(v) and v in u + u


def conjugacy_class_key(w: Word) -> Word:
    '''Least rotation, a canonical name for the conjugacy class of w.'''
    return min(conjugates(w))


def detect_period(w: Word, t_max: int, max_preperiod: int | None = None) -> Period | None:
    """
    Find the smallest period t <= t_max of an ultimately periodic prefix.

    For each t the smallest preperiod l with w[i] == w[i+t] for all
    l <= i < |w|-t is computed; t is accepted when l <= max_preperiod
    (default t_max) and the checked tail w[l:] holds at least two full
    periods.  Returns None when no t qualifies.
    """
    if max_preperiod is None:
        max_preperiod = t_max
    for t in range(1, min(t_max, len(w) - 1) + 1):
        preperiod = 0
        for i in range(len(w) - t - 1, -1, -1):
            if w[i] != w[i + t]:
                preperiod = i + 1
                break
        if preperiod <= max_preperiod and len(w) - preperiod >= 2 * t:
            return Period(preperiod, t)
    return None


def occurrences(w: Word, v: Word) -> list[int]:
    if not v:
        raise LengthOutOfRange(0, "pattern must be non-empty")
    found = []
    i = w.find(v)
    while i >= 0:
        found.append(i)
        i = w.find(v, i + 1)
    return found
