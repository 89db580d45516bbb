'''
Equidistribution diagnostics and verification reports.

A report is a list of named checks.  Each check records how many instances
it examined; a check that examined nothing fails, so no report passes
vacuously.  Every result here comes from a finite prefix and is empirical.
'''
import dataclasses
import enum
import logging
import random

import econfig
from constructions import sturmian_representative
from exactreal import ExactReal, ONE, ZERO
from permutations import (Direction, Representative, canonical_estimate, factor_map, find_N_extremal,
                          longest_monotone_chain, greedy_monotone_chain, lower_bound_witness,
                          perm_complexity_profile, underlying_word)
from sturmian import (Convention, NotAFactorWeight, ParseFailure, SturmianSpec, Weight, bispecial_candidates,
                      block_lengths, christoffel_lengths, christoffel_pair, christoffel_prefixes, exact_factor_sets,
                      factorize, frequency_report, generate, require_irrational, singular_factor, tower_covering,
                      tower_for_slope, weight_class, weight_constant_classes)
from util import LabException
from words import LengthOutOfRange, complexity_profile, conjugates, factors, is_conjugate, special_factors

logger = logging.getLogger(__name__)

EMPIRICAL_NOTE = "empirical: finite prefixes cannot certify a limit"


class OutOfUnitInterval(LabException):
    def __init__(self, index: int, value: ExactReal):
        super().__init__(f"value {value} at position {index} is outside [0, 1]")
        self.index = index
        self.value = value


class CheckStatus(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclasses.dataclass
class Check():
    name: str
    params: dict
    status: CheckStatus
    instances: int
    witness: str | None = None

    def as_record(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "status": self.status.value,
            "instances": self.instances,
            "witness": self.witness,
        }


@dataclasses.dataclass
class VerificationReport():
    title: str
    checks: list[Check] = dataclasses.field(default_factory=list)
    note: str | None = None

    def add(self, name: str, params: dict, instances: int, witness: str | None = None) -> Check:
        '''Record a check that fails exactly when a witness is given or nothing was examined.'''
        if witness is None and instances == 0:
            witness = "no instances examined"
        status = CheckStatus.PASS if witness is None else CheckStatus.FAIL
        check = Check(name, params, status, instances, witness)
        self.checks.append(check)
        logger.debug("%s: %s %s (%d instances)", self.title, name, status.value, instances)
        return check

    def skip(self, name: str, params: dict, reason: str) -> Check:
        check = Check(name, params, CheckStatus.SKIP, 0, reason)
        self.checks.append(check)
        return check

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for c in self.checks:
            counts[c.status.value] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    def as_records(self) -> list[dict]:
        return [c.as_record() for c in self.checks]


#
# Discrepancy
#
def star_discrepancy(values) -> ExactReal:
    """
    D*_N = max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the sorted values.

    Exact: the result is an ExactReal in the field of the inputs.
    """
    values = [ExactReal.of(v) for v in values]
    if not values:
        raise LengthOutOfRange(0, "discrepancy of an empty sequence")
    for index, v in enumerate(values):
        if v < ZERO or v > ONE:
            raise OutOfUnitInterval(index, v)
    size = len(values)
    worst = ZERO
    for i, x in enumerate(sorted(values), start=1):
        above = ExactReal(i, 0, size) - x
        below = x - ExactReal(i - 1, 0, size)
        worst = max(worst, above, below)
    return worst


def discrepancy_schedule(rep: Representative, schedule: list[int]) -> list[tuple[int, ExactReal]]:
    return [(n, star_discrepancy(rep.values[:n])) for n in schedule if 1 <= n <= len(rep)]


def equidistribution_report(rep: Representative, schedule: list[int]) -> VerificationReport:
    '''D*_N at each prefix length of the schedule and whether it keeps falling.'''
    report = VerificationReport("equidistribution", note=EMPIRICAL_NOTE)
    measured = discrepancy_schedule(rep, schedule)
    for n, d in measured:
        report.add(f"discrepancy[N={n}]", {"N": n, "discrepancy": str(d), "approx": round(float(d), 8)}, 1)
    witness = None
    for (n0, d0), (n1, d1) in zip(measured, measured[1:]):
        if d1 > d0:
            witness = f"D* rises from {float(d0):.6f} at N={n0} to {float(d1):.6f} at N={n1}"
            break
    report.add("decreasing-trend", {"schedule": [n for n, _ in measured]}, max(len(measured) - 1, 0), witness)
    return report


#
# Sturmian words
#
def verify_sturmian_word(sigma: ExactReal, depth: int, prefix_length: int | None = None,
                         bispecial_depth: int = 200) -> VerificationReport:
    """
    Exact factor counts, one-counts, weight constancy on conjugacy classes,
    special factors, Christoffel coverage and agreement of a generated prefix
    with the exact factor sets, for n = 1..depth.
    """
    sigma = require_irrational(sigma)
    if depth < 1:
        raise LengthOutOfRange(depth, "depth must be at least 1")
    if prefix_length is None:
        prefix_length = 200 * depth
    params = {"sigma": str(sigma), "depth": depth}
    report = VerificationReport("sturmian-word")
    sets = exact_factor_sets(sigma, depth + 1)

    witness = None
    for n in range(1, depth + 1):
        if len(sets[n]) != n + 1:
            witness = f"n={n}: {len(sets[n])} factors"
            break
    report.add("exact-count", params, depth, witness)

    witness = None
    examined = 0
    for n in range(1, depth + 1):
        for v in sets[n]:
            examined += 1
            try:
                weight_class(v, sigma)
            except NotAFactorWeight:
                witness = v
                break
        if witness:
            break
    report.add("one-counts", params, examined, witness)

    witness = None
    examined = 0
    for n in range(1, depth + 1):
        for key, weights in weight_constant_classes(sets[n], sigma).items():
            examined += 1
            if len(weights) != 1:
                witness = f"class of {key} mixes light and heavy"
                break
        if witness:
            break
    report.add("conjugacy-weight", params, examined, witness)

    witness = None
    for n in range(1, depth + 1):
        special = special_factors(sets[n], sets[n + 1])
        if len(special.right) != 1 or len(special.left) != 1:
            witness = f"n={n}: right {sorted(special.right)}, left {sorted(special.left)}"
            break
    report.add("special-factors", params, depth, witness)

    witness = None
    examined = 0
    for m in range(1, min(depth, bispecial_depth) - 1):
        for b in special_factors(sets[m], sets[m + 1]).bispecial:
            examined += 1
            witness = _christoffel_coverage(sigma, b, sets[m + 2])
            if witness:
                break
        if witness:
            break
    report.add("christoffel-coverage", params, examined, witness)

    witness = None
    examined = 0
    tower = tower_covering(sigma, depth)
    for n in range(0, tower.top + 1):
        d_next = tower.d(n + 1)
        if d_next is None:
            break
        if d_next < 1:
            continue
        for k, b in enumerate(bispecial_candidates(tower, n, d_next), start=1):
            if not 1 <= len(b) <= depth:
                continue
            examined += 1
            if b not in special_factors(sets[len(b)], sets[len(b) + 1]).bispecial:
                witness = f"s_{n}^{k} s_{n - 1} gives {b}, not bispecial"
                break
        if witness:
            break
    report.add("bispecial-candidates", params, examined, witness)

    word = generate(SturmianSpec(sigma), prefix_length)
    witness = None
    for n in range(1, depth + 1):
        if factors(word, n).members != sets[n].members:
            witness = f"n={n}: prefix of {prefix_length} letters shows {len(factors(word, n))} factors"
            break
    report.add("prefix-complexity", {**params, "prefix_length": prefix_length}, depth, witness)

    density = frequency_report(word)
    witness = None
    if abs(ExactReal.of(density) - sigma) > ExactReal(1, 0, 100):
        witness = f"ones density {float(density):.6f} vs slope {float(sigma):.6f}"
    report.add("ones-density", {**params, "prefix_length": prefix_length}, 1, witness)
    return report


def _christoffel_coverage(sigma: ExactReal, b: str, fs) -> str | None:
    lower, upper = christoffel_pair(b)
    if lower not in fs or upper not in fs:
        return f"christoffel pair of {b} missing from the factors"
    if not is_conjugate(lower, upper):
        return f"{lower} and {upper} are not conjugate"
    rest = fs.members - conjugates(lower)
    split = singular_factor(sigma, len(lower))
    if len(rest) != 1 or rest != split.singular:
        return f"length {len(lower)}: non-conjugates {sorted(rest)}, singular {sorted(split.singular)}"
    return None


#
# Sturmian permutations
#
def verify_sturmian_permutation(sigma: ExactReal, rho: ExactReal, depth: int, length: int,
                                seed: int | None = None, pairs: int = 1000,
                                convention: Convention = Convention.LOWER) -> VerificationReport:
    """
    Complexity n for n = 1..depth, the underlying word, the light/heavy order
    correspondence on random pairs, N-extremal elements for N <= depth/2, the
    word-to-permutation complexity bridge, patterns determined by their words,
    lower-bound witnesses and the canonical estimate against D*.
    """
    seed = econfig.seed(seed)
    spec = SturmianSpec(require_irrational(sigma), rho, convention)
    rep = sturmian_representative(spec.sigma, spec.rho, length, convention)
    if depth > length:
        raise LengthOutOfRange(depth, f"depth exceeds the representative length {length}")
    params = {"sigma": str(spec.sigma), "rho": str(spec.rho), "depth": depth, "length": length}
    report = VerificationReport("sturmian-permutation", note=EMPIRICAL_NOTE)

    profile = perm_complexity_profile(rep, depth)
    witness = next((f"n={n}: {profile[n]} patterns" for n in range(1, depth + 1) if profile[n] != n), None)
    report.add("perm-complexity", params, depth, witness)

    s = underlying_word(rep)
    expected = generate(spec, length - 1)
    witness = None
    if s != expected:
        first = next(i for i, (x, y) in enumerate(zip(s, expected)) if x != y)
        witness = f"letter {first}: {s[first]} vs {expected[first]}"
    report.add("underlying-word", params, len(s), witness)

    rng = random.Random(seed)
    witness = None
    examined = 0
    if length > 1:
        for _ in range(pairs):
            i, j = sorted(rng.sample(range(length), 2))
            examined += 1
            light = weight_class(s[i:j], spec.sigma) is Weight.LIGHT
            if light != (rep.values[i] < rep.values[j]):
                witness = f"pair ({i}, {j})"
                break
    report.add("order-weight", {**params, "seed": seed, "pairs": pairs}, examined, witness)

    witness = None
    examined = 0
    for N in range(1, depth // 2 + 1):
        if length < 2 * N + 1:
            break
        examined += 1
        found = find_N_extremal(rep, N)
        if not found.maximal or not found.minimal:
            witness = f"N={N}: maximal {len(found.maximal)}, minimal {len(found.minimal)}"
            break
    report.add("extremals", params, examined, witness)

    word_profile = complexity_profile(s, min(depth - 1, len(s))) if depth > 1 else None
    witness = None
    examined = 0
    for n in range(2, depth + 1):
        if word_profile is None or n - 1 not in word_profile.counts:
            break
        examined += 1
        if profile[n] < word_profile[n - 1]:
            witness = f"n={n}: {profile[n]} patterns < {word_profile[n - 1]} words"
            break
    report.add("complexity-bridge", params, examined, witness)

    witness = None
    examined = 0
    for n in range(2, depth + 1):
        for w, found_patterns in factor_map(rep, n).items():
            examined += 1
            if len(found_patterns) != 1:
                witness = f"word {w} carries {len(found_patterns)} patterns"
                break
        if witness:
            break
    report.add("pattern-by-word", params, examined, witness)

    witness = None
    examined = 0
    for n in range(2, depth // 2 + 1):
        if length < 2 * n + 1:
            break
        found = lower_bound_witness(rep, n)
        examined += 1
        if found is None or len(set(found.patterns)) != n:
            witness = f"n={n}: no n distinct windows around an n-maximal element"
            break
    report.add("lower-bound-witness", params, examined, witness)

    bound = star_discrepancy(rep.values)
    witness = None
    examined = 0
    for i in range(min(100, length)):
        examined += 1
        estimate = ExactReal.of(canonical_estimate(rep, i))
        if abs(estimate - rep.values[i]) > bound:
            witness = f"i={i}: estimate {estimate} vs value {rep.values[i]}"
            break
    report.add("canonical-estimate", {**params, "discrepancy": round(float(bound), 8)}, examined, witness)
    return report


#
# Decomposition
#
def verify_decomposition(sigma: ExactReal, levels: int, length: int, rho: ExactReal = ZERO,
                         christoffel_max: int = 500) -> VerificationReport:
    """
    Block decomposition of a prefix at levels 0..levels, exponent sets,
    reconstruction, light/heavy alternation and Christoffel length agreement.
    Levels the prefix or the tower cannot reach are skipped.
    """
    sigma = require_irrational(sigma)
    if levels < 1:
        raise LengthOutOfRange(levels, "levels must be at least 1")
    params = {"sigma": str(sigma), "levels": levels, "length": length}
    report = VerificationReport("decomposition")
    word = generate(SturmianSpec(sigma, rho), length)
    tower = tower_for_slope(sigma, levels + 1)

    for n in range(0, levels + 1):
        level_params = {**params, "level": n}
        d_next = tower.d(n + 1)
        if n > tower.top or d_next is None:
            report.skip(f"factorize[{n}]", level_params, "level beyond the tower horizon")
            continue
        if 3 * len(tower.block(n, d_next + 1)) > length:
            report.skip(f"factorize[{n}]", level_params, "prefix too short for two blocks at this level")
            continue
        try:
            found = factorize(word, tower, n)
        except ParseFailure as e:
            report.add(f"factorize[{n}]", level_params, 1, e.message)
            continue
        witness = None
        bad = [k for k in found.exponents if k not in (d_next, d_next + 1)]
        if bad:
            witness = f"exponent {bad[0]} not in {{{d_next}, {d_next + 1}}}"
        elif found.reconstruct() != word:
            witness = "concatenation differs from the prefix"
        report.add(f"factorize[{n}]", {**level_params, "blocks": len(found.blocks)}, len(found.blocks), witness)

    witness = None
    examined = 0
    for n in range(0, min(levels, tower.top) + 1):
        d_next = tower.d(n + 1)
        if d_next is None:
            break
        own = weight_class(tower.s(n), sigma)
        for k in range(1, d_next + 1):
            examined += 1
            block = tower.block(n, k)
            if weight_class(block, sigma) is own:
                witness = f"s_{n} and s_{n}^{k} s_{n - 1} are both {own.value}"
                break
        if witness:
            break
    report.add("weight-alternation", params, examined, witness)

    deep = tower_covering(sigma, christoffel_max)
    expected = block_lengths(deep, christoffel_max)
    found_lengths = [n for n in christoffel_lengths(sigma, christoffel_max) if n >= 2]
    witness = None
    if found_lengths != expected:
        witness = f"running extrema {found_lengths[:8]} vs block lengths {expected[:8]}"
    report.add("christoffel-lengths", {**params, "n_max": christoffel_max}, len(found_lengths), witness)

    witness = None
    examined = 0
    bispecial_max = min(christoffel_max, 200)
    prefixes = [p for p in christoffel_prefixes(sigma, bispecial_max) if p.length >= 3]
    if prefixes:
        sets = exact_factor_sets(sigma, max(p.length for p in prefixes))
        for p in prefixes:
            examined += 1
            b = p.word[1:-1]
            if p.word not in christoffel_pair(b):
                witness = f"prefix {p.word} is not of the form 0b1 or 1b0"
                break
            if b not in special_factors(sets[len(b)], sets[len(b) + 1]).bispecial:
                witness = f"prefix {p.word}: {b} is not bispecial"
                break
    report.add("christoffel-prefixes", {**params, "n_max": bispecial_max}, examined, witness)
    return report


#
# Monotone chains
#
def monotone_diagnostics(rep: Representative, N_max: int) -> VerificationReport:
    """
    Longest N-monotone chains in both directions and the presence of
    N-maximal and N-minimal elements for N = 1..N_max.

    A chain of linear length (at least L/(2N)) marks a permutation that is
    not equidistributed; short chains with extremals present are what an
    equidistributed permutation shows.
    """
    if N_max < 1 or len(rep) < 4 * N_max:
        raise LengthOutOfRange(N_max, f"need at least {4 * N_max} values")
    report = VerificationReport("monotone")
    linear = None
    for N in range(1, N_max + 1):
        for direction in Direction:
            longest = longest_monotone_chain(rep, N, direction)
            greedy = greedy_monotone_chain(rep, N, direction)
            report.add(f"chain[N={N},{direction.value}]",
                       {"N": N, "direction": direction.value, "longest": longest,
                        "greedy": len(greedy.indices), "greedy_monotone": greedy.is_monotone}, 1)
            if linear is None and 2 * N * longest >= len(rep):
                linear = (N, direction, longest)
        found = find_N_extremal(rep, N)
        witness = None
        if not found.maximal or not found.minimal:
            witness = f"N={N}: maximal {len(found.maximal)}, minimal {len(found.minimal)}"
        report.add(f"extremals[N={N}]", {"N": N, "maximal": len(found.maximal), "minimal": len(found.minimal)},
                   len(rep) - 2 * N, witness)
    if linear is not None:
        N, direction, longest = linear
        report.note = f"{direction.value} {N}-monotone chain of length {longest}: not equidistributed"
    else:
        report.note = "short monotone chains: equidistributed candidate (" + EMPIRICAL_NOTE + ")"
    return report
