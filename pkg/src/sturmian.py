'''
Sturmian words of a given slope.

Words are codings of the rotation x -> {x + sigma} on [0, 1) against the
partition [0, 1-sigma), [1-sigma, 1) (lower convention) or (0, 1-sigma],
(1-sigma, 1] (upper convention, built on the upper fractional part).
The standard word tower s_{-1}=1, s_0=0, s_n = s_{n-1}^{d_n} s_{n-2} follows
the continued fraction sigma = [0; 1+d_1, d_2, ...].
'''
import dataclasses
import enum
import logging
from fractions import Fraction

from exactreal import ExactReal, ONE, ZERO, cf_expansion, midpoint
from util import LabException
from words import FactorSet, LengthOutOfRange, Word, conjugacy_class_key, ones

logger = logging.getLogger(__name__)


class RationalSlope(LabException):
    def __init__(self, sigma: ExactReal):
        super().__init__(f"Slope {sigma} is rational; an irrational slope is required")
        self.sigma = sigma


class InvalidSlope(LabException):
    def __init__(self, sigma: ExactReal):
        super().__init__(f"Slope {sigma} is not in (0, 1)")
        self.sigma = sigma


class NotAFactorWeight(LabException):
    def __init__(self, word: Word, sigma: ExactReal):
        super().__init__(f"{word} has {ones(word)} ones, which is neither floor nor ceiling of {len(word)}*{sigma}")
        self.word = word


class InvalidQuotient(LabException):
    pass


class TooShort(LabException):
    pass


class ParseFailure(LabException):
    def __init__(self, level: int, position: int, message: str):
        super().__init__(f"level {level}, position {position}: {message}")
        self.level = level
        self.position = position


class Convention(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


class Weight(enum.Enum):
    LIGHT = "light"
    HEAVY = "heavy"


@dataclasses.dataclass(frozen=True)
class SturmianSpec():
    sigma: ExactReal
    rho: ExactReal = ZERO
    convention: Convention = Convention.LOWER

    def __post_init__(self):
        object.__setattr__(self, "sigma", ExactReal.of(self.sigma))
        object.__setattr__(self, "rho", ExactReal.of(self.rho))
        if not (ZERO < self.sigma < ONE):
            raise InvalidSlope(self.sigma)
        self.sigma._field(self.rho)

    @property
    def is_irrational(self) -> bool:
        return not self.sigma.is_rational

    @property
    def is_degenerate(self) -> bool:
        '''A rational slope codes a periodic word.'''
        return self.sigma.is_rational


def require_irrational(sigma: ExactReal) -> ExactReal:
    sigma = ExactReal.of(sigma)
    if not (ZERO < sigma < ONE):
        raise InvalidSlope(sigma)
    if sigma.is_rational:
        raise RationalSlope(sigma)
    return sigma


def coding(sigma: ExactReal, tau: ExactReal, n: int, convention: Convention = Convention.LOWER) -> Word:
    '''The first n letters of the coding of the orbit of tau.'''
    threshold = ONE - sigma
    x = ExactReal.of(tau).frac()
    letters = []
    for _ in range(n):
        if convention is Convention.LOWER:
            letters.append("0" if x < threshold else "1")
        else:
            # x == 0 stands for the point 1 of (0, 1].
            is_zero = x.a == 0 and x.b == 0
            letters.append("0" if not is_zero and x <= threshold else "1")
        x = x + sigma
        if x >= ONE:
            x = x - ONE
    return "".join(letters)


def generate(spec: SturmianSpec, n: int) -> Word:
    if n < 1:
        raise LengthOutOfRange(n, "word length must be at least 1")
    return coding(spec.sigma, spec.rho, n, spec.convention)


def mechanical_word(spec: SturmianSpec, n: int) -> Word:
    '''Closed form floor(sigma(i+1)+rho) - floor(sigma*i+rho); ceilings for the upper convention.'''
    if n < 1:
        raise LengthOutOfRange(n, "word length must be at least 1")
    if spec.convention is Convention.LOWER:
        cut = [(spec.rho + spec.sigma * i).floor() for i in range(n + 1)]
    else:
        cut = [(spec.rho + spec.sigma * i).ceil() for i in range(n + 1)]
    return "".join(str(cut[i + 1] - cut[i]) for i in range(n))


def _circle_samples(sigma: ExactReal, n: int) -> list[ExactReal]:
    '''One interior point of each arc cut out by the points {-i*sigma}, 0 <= i <= n.'''
    points = sorted({(-(sigma * i)).frac() for i in range(n + 1)})
    bounds = points + [ONE]
    return [midpoint(left, right) for left, right in zip(bounds, bounds[1:])]


def enumerate_factors_exact(sigma: ExactReal, n: int) -> FactorSet:
    """
    All factors of length n of a Sturmian word of slope sigma.

    The start points tau giving the same length-n coding form the arcs between
    consecutive points {-i*sigma}, i = 0..n, so one sample per arc suffices.
    """
    sigma = require_irrational(sigma)
    if n < 1:
        raise LengthOutOfRange(n, "factor length must be at least 1")
    members = frozenset(coding(sigma, tau, n) for tau in _circle_samples(sigma, n))
    return FactorSet(n, members)


def exact_factor_sets(sigma: ExactReal, n_max: int) -> dict[int, FactorSet]:
    '''Factor sets for n = 1..n_max, read off as prefixes of the length-n_max set.'''
    top = enumerate_factors_exact(sigma, n_max)
    result = {n_max: top}
    for n in range(1, n_max):
        result[n] = FactorSet(n, frozenset(w[:n] for w in top.members))
    return result


@dataclasses.dataclass(frozen=True)
class SingularSplit():
    flippable: frozenset[Word]
    singular: frozenset[Word]


def singular_factor(sigma: ExactReal, n: int) -> SingularSplit:
    """
    Split the length-n factors by the order of the end points of their orbit segment.

    For a factor coded from tau, the segment is {tau + i*sigma}, i = 0..n.  The
    factor is flippable when no intermediate point lies between the two end
    points; the remaining (singular) factor has every other point between them.
    """
    sigma = require_irrational(sigma)
    flippable = set()
    singular = set()
    for tau in _circle_samples(sigma, n):
        points = [(tau + sigma * i).frac() for i in range(n + 1)]
        lo, hi = min(points[0], points[n]), max(points[0], points[n])
        word = coding(sigma, tau, n)
        if any(lo < y < hi for y in points[1:n]):
            singular.add(word)
        else:
            flippable.add(word)
    return SingularSplit(frozenset(flippable), frozenset(singular))


def weight_class(v: Word, sigma: ExactReal) -> Weight:
    scaled = ExactReal.of(sigma) * len(v)
    k = ones(v)
    if k == scaled.floor():
        return Weight.LIGHT
    if k == scaled.ceil():
        return Weight.HEAVY
    raise NotAFactorWeight(v, sigma)


@dataclasses.dataclass(frozen=True)
class StandardWordTower():
    '''Quotients d_1, d_2, ... and the standard words s_{-1}, s_0, ..., s_top.'''
    quotients: tuple[int, ...]
    words: tuple[Word, ...]

    @property
    def top(self) -> int:
        return len(self.words) - 2

    def s(self, n: int) -> Word:
        if not -1 <= n <= self.top:
            raise IndexError(f"standard word s_{n} is outside the tower (top level {self.top})")
        return self.words[n + 1]

    def d(self, n: int) -> int | None:
        if 1 <= n <= len(self.quotients):
            return self.quotients[n - 1]
        return None

    def block(self, n: int, k: int) -> Word:
        '''s_n^k s_{n-1}.'''
        return self.s(n) * k + self.s(n - 1)


def _check_quotients(quotients: list[int] | tuple[int, ...]):
    for index, q in enumerate(quotients, start=1):
        if (index == 1 and q < 0) or (index > 1 and q < 1):
            raise InvalidQuotient(f"d_{index} = {q} is not allowed")


def standard_tower(quotients: list[int] | tuple[int, ...], m: int) -> StandardWordTower:
    if m < 0:
        raise InvalidQuotient(f"tower level {m} is negative")
    if len(quotients) < m:
        raise InvalidQuotient(f"level {m} needs {m} quotients, got {len(quotients)}")
    _check_quotients(quotients)
    words = ["1", "0"]
    for n in range(1, m + 1):
        words.append(words[-1] * quotients[n - 1] + words[-2])
    return StandardWordTower(tuple(quotients), tuple(words))


def tower_quotients(cf_quotients: tuple[int, ...] | list[int]) -> list[int]:
    '''[a_1, a_2, ...] of sigma = [0; a_1, a_2, ...] to the tower's d_1 = a_1 - 1, d_n = a_n.'''
    if not cf_quotients:
        return []
    return [cf_quotients[0] - 1] + list(cf_quotients[1:])


def tower_for_slope(sigma: ExactReal, m: int) -> StandardWordTower:
    '''Tower up to level m, keeping d_{m+1} when the expansion provides it.'''
    cf = cf_expansion(sigma, m + 1)
    quotients = tower_quotients(cf.quotients)
    return standard_tower(quotients, min(m, len(quotients)))


def tower_covering(sigma: ExactReal, length: int) -> StandardWordTower:
    '''The shortest tower whose top word is longer than length.'''
    m = 4
    while True:
        tower = tower_for_slope(sigma, m)
        if len(tower.s(tower.top)) > length or tower.top < m:
            return tower
        m *= 2


def bispecial_candidates(tower: StandardWordTower, n: int, max_k: int) -> list[Word]:
    '''s_n^k s_{n-1} with the last two letters erased, for k = 1..max_k.'''
    if not 0 <= n <= tower.top:
        raise InvalidQuotient(f"level {n} is outside the tower (top level {tower.top})")
    d_next = tower.d(n + 1)
    if max_k < 1 or (d_next is not None and max_k > d_next):
        raise InvalidQuotient(f"k must be in 1..{d_next}, got {max_k}")
    candidates = []
    for k in range(1, max_k + 1):
        w = tower.block(n, k)
        if len(w) < 2:
            raise TooShort(f"s_{n}^{k} s_{n - 1} = {w} is shorter than 2")
        candidates.append(w[:-2])
    return candidates


def christoffel_pair(b: Word) -> tuple[Word, Word]:
    return "0" + b + "1", "1" + b + "0"


def block_lengths(tower: StandardWordTower, n_max: int) -> list[int]:
    '''Sorted distinct lengths |s_n^k s_{n-1}| <= n_max for 0 < k <= d_{n+1}.'''
    lengths = set()
    for n in range(0, tower.top + 1):
        d_next = tower.d(n + 1)
        if d_next is None:
            break
        for k in range(1, d_next + 1):
            size = k * len(tower.s(n)) + len(tower.s(n - 1))
            if size <= n_max:
                lengths.add(size)
    return sorted(lengths)


def _running_extrema(sigma: ExactReal, n_max: int) -> list[tuple[int, str]]:
    result = []
    lowest = highest = None
    x = ZERO
    for n in range(1, n_max + 1):
        x = x + sigma
        if x >= ONE:
            x = x - ONE
        if lowest is None or x < lowest:
            lowest = x
            result.append((n, "min"))
        if highest is None or x > highest:
            highest = x
            result.append((n, "max"))
    return result


def christoffel_lengths(sigma: ExactReal, n_max: int) -> list[int]:
    '''All n <= n_max at which {n*sigma} is a strict running minimum or maximum over 1..n.'''
    sigma = require_irrational(sigma)
    if n_max < 1:
        raise LengthOutOfRange(n_max, "n_max must be at least 1")
    return sorted({n for n, _ in _running_extrema(sigma, n_max)})


@dataclasses.dataclass(frozen=True)
class ChristoffelPrefix():
    length: int
    kind: str
    word: Word


def christoffel_prefixes(sigma: ExactReal, n_max: int) -> list[ChristoffelPrefix]:
    """
    Christoffel words read off the orbit of 0.

    A running minimum n gives the lower-convention prefix of length n, of the
    form 0b1; a running maximum gives the upper-convention prefix, 1b0.
    """
    sigma = require_irrational(sigma)
    prefixes = []
    for n, kind in _running_extrema(sigma, n_max):
        if n < 2:
            continue
        convention = Convention.LOWER if kind == "min" else Convention.UPPER
        prefixes.append(ChristoffelPrefix(n, kind, coding(sigma, ZERO, n, convention)))
    return prefixes


@dataclasses.dataclass(frozen=True)
class Factorization():
    '''s_prefix = prefix + blocks + residue with blocks s_n^k s_{n-1}.'''
    level: int
    prefix: Word
    exponents: tuple[int, ...]
    blocks: tuple[Word, ...]
    residue: Word

    def reconstruct(self) -> Word:
        return self.prefix + "".join(self.blocks) + self.residue


def _parse_blocks(text: Word, pos: int, short_block: Word, long_block: Word, d: int):
    exponents = []
    blocks = []
    while pos < len(text):
        rest = text[pos:]
        if rest.startswith(long_block):
            exponents.append(d + 1)
            blocks.append(long_block)
            pos += len(long_block)
        elif rest.startswith(short_block) and not long_block.startswith(rest[:len(long_block)]):
            exponents.append(d)
            blocks.append(short_block)
            pos += len(short_block)
        elif long_block.startswith(rest) or short_block.startswith(rest):
            return exponents, blocks, rest
        else:
            return None
    return exponents, blocks, ""


def factorize(s_prefix: Word, tower: StandardWordTower, n: int) -> Factorization:
    """
    Parse s_prefix as p (s_n^{k_1} s_{n-1}) (s_n^{k_2} s_{n-1}) ... + residue.

    Each complete k_i is d_{n+1} or d_{n+1}+1, p is a proper suffix of
    s_n^{d_{n+1}+1} s_{n-1}, and the residue is an incomplete final block.
    The shortest p admitting a parse with at least two complete blocks wins.
    """
    if not 0 <= n <= tower.top:
        raise InvalidQuotient(f"level {n} is outside the tower (top level {tower.top})")
    d = tower.d(n + 1)
    if d is None:
        raise InvalidQuotient(f"d_{n + 1} is unknown for this tower")
    short_block = tower.block(n, d)
    long_block = tower.block(n, d + 1)
    for p_len in range(len(long_block)):
        prefix = s_prefix[:p_len]
        if not long_block.endswith(prefix):
            continue
        parsed = _parse_blocks(s_prefix, p_len, short_block, long_block, d)
        if parsed is None:
            continue
        exponents, blocks, residue = parsed
        if len(blocks) >= 2:
            logger.debug("level %d: prefix %d letters, %d blocks", n, p_len, len(blocks))
            return Factorization(n, prefix, tuple(exponents), tuple(blocks), residue)
    raise ParseFailure(n, 0, "no prefix admits a decomposition into s_n^k s_{n-1} blocks")


def frequency_report(w: Word) -> Fraction:
    if not w:
        raise LengthOutOfRange(0, "frequency of an empty word")
    return Fraction(ones(w), len(w))


def weight_constant_classes(factor_set: FactorSet, sigma: ExactReal) -> dict[Word, set[Weight]]:
    '''Weights seen in each conjugacy class of the factor set, keyed by least rotation.'''
    classes: dict[Word, set[Weight]] = {}
    for w in factor_set.members:
        key = conjugacy_class_key(w)
        classes.setdefault(key, set()).add(weight_class(w, sigma))
    return classes
