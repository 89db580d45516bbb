from fractions import Fraction

import pytest

import constructions
from constructions import (CycleDetected, Example1Variant, NotEnoughTerms, NotStrictlyIncreasing,
                           OrderConstraintSet, realize)
from exactreal import ExactReal, ONE, ZERO
from permutations import detect_perm_period, equivalent, pattern_of, perm_complexity_profile, underlying_word
from sturmian import Convention, SturmianSpec, generate
from words import LengthOutOfRange, detect_period


def powers_of_two(count):
    return [2 ** k for k in range(1, count + 1)]


def test_realize_examples():
    rep = realize(OrderConstraintSet(3, {(0, 1), (1, 2)}))
    assert rep.values == (ExactReal(1, 0, 4), ExactReal(1, 0, 2), ExactReal(3, 0, 4))
    rep = realize(OrderConstraintSet(3, {(2, 0)}))
    assert pattern_of(rep).ranks == (3, 1, 2)
    assert len(realize(OrderConstraintSet(0, set()))) == 0


def test_realize_respects_constraints(rng):
    for _ in range(50):
        size = rng.randint(2, 40)
        hidden = rng.sample(range(size), size)
        relations = set()
        for _ in range(size * 2):
            i, j = rng.sample(range(size), 2)
            relations.add((i, j) if hidden[i] < hidden[j] else (j, i))
        rep = realize(OrderConstraintSet(size, relations))
        assert all(ZERO < v < ONE for v in rep.values)
        assert all(rep.values[i] < rep.values[j] for i, j in relations)


def test_constraint_errors():
    with pytest.raises(CycleDetected) as info:
        OrderConstraintSet(4, {(0, 1), (1, 2), (2, 0)})
    assert info.value.indices == [0, 1, 2]
    with pytest.raises(LengthOutOfRange):
        OrderConstraintSet(2, {(0, 2)})


def test_sturmian_representative(golden, root2_over_4):
    rep = constructions.sturmian_representative(root2_over_4, ZERO, 4)
    assert rep.values[0] == ZERO
    assert rep.values[1] == root2_over_4
    assert rep.values[3] == ExactReal(-4, 3, 4, 2)
    upper = constructions.sturmian_representative(golden, ZERO, 3, Convention.UPPER)
    assert upper.values[0] == ONE
    with pytest.raises(LengthOutOfRange):
        constructions.sturmian_representative(golden, ZERO, 0)


@pytest.mark.parametrize("convention", list(Convention))
def test_sturmian_representative_word(golden, convention):
    rho = ExactReal(1, 0, 3)
    rep = constructions.sturmian_representative(golden, rho, 10_000, convention)
    assert underlying_word(rep) == generate(SturmianSpec(golden, rho, convention), 9_999)


def quadratic_unit_interval(rng, d):
    '''A random irrational in (0, 1) from Q(sqrt(d)).'''
    b = rng.choice([-1, 1]) * rng.randint(1, 9)
    return ExactReal(rng.randint(-20, 20), b, rng.randint(1, 30), d).frac()


@pytest.mark.parametrize("convention", list(Convention))
def test_random_rotations_code_their_word(rng, convention):
    for k in range(20):
        d = (2, 5)[k % 2]
        sigma = quadratic_unit_interval(rng, d)
        if rng.random() < 0.5:
            rho = quadratic_unit_interval(rng, d)
        else:
            rho = ExactReal.of(Fraction(rng.randint(0, 40), rng.randint(1, 40)))
        rep = constructions.sturmian_representative(sigma, rho, 2000, convention)
        assert underlying_word(rep) == generate(SturmianSpec(sigma, rho, convention), 1999), (sigma, rho)


def test_thue_morse_representative():
    rep = constructions.thue_morse_representative(8)
    assert rep.values == tuple(ExactReal.of(Fraction(n, 8)) for n in (4, 8, 6, 2, 5, 1, 3, 7))


def test_thue_morse_word_matches_parity():
    word = underlying_word(constructions.thue_morse_representative(65))
    parity = "".join(str(bin(n).count("1") % 2) for n in range(64))
    assert word == parity


def test_thue_morse_values_stay_in_unit_interval():
    rep = constructions.thue_morse_representative(1024)
    assert all(ZERO < v <= ONE for v in rep.values)
    assert detect_period(underlying_word(rep), 16) is None


def test_example1_variants():
    a = constructions.example1_representative(50)
    b = constructions.example1_representative(50, Example1Variant.B)
    assert a.values[:3] == (ONE, ExactReal(-1, 0, 2), ExactReal(1, 0, 4))
    assert b.values[1] == ExactReal(2999, 0, 3)
    assert equivalent(a, b)
    assert underlying_word(a) == ("10" * 25)[:49]


def test_slow_complexity_values():
    rep = constructions.slow_complexity_representative(powers_of_two(5), 10)
    assert rep.values[0] == ZERO
    assert rep.values[2] == ExactReal(1, 0, 2)
    # between 1/2 at position 2 and 2/3 at position 4
    assert rep.values[1] == ExactReal(7, 0, 12)
    assert rep.values[3] == ExactReal.of(Fraction(31, 40))


def test_slow_complexity_satisfies_constraints():
    for nk in (powers_of_two(64), [3 * k for k in range(1, 65)], list(range(1, 65))):
        rep = constructions.slow_complexity_representative(nk, 128)
        found = constructions.slow_complexity_constraints(nk, 128)
        assert found.relations
        assert all(rep.values[i] < rep.values[j] for i, j in found.relations)


def test_slow_complexity_constraints_pin_the_order():
    nk = powers_of_two(32)
    realized = realize(constructions.slow_complexity_constraints(nk, 64))
    assert equivalent(realized, constructions.slow_complexity_representative(nk, 64))


def test_slow_complexity_errors():
    with pytest.raises(NotStrictlyIncreasing) as info:
        constructions.slow_complexity_representative([2, 4, 4], 6)
    assert info.value.position == 2
    with pytest.raises(NotStrictlyIncreasing):
        constructions.slow_complexity_representative([0, 1], 4)
    with pytest.raises(NotEnoughTerms) as info:
        constructions.slow_complexity_representative([2, 4], 10)
    assert info.value.needed == 5


def test_golden_orbit_values(golden):
    rep = constructions.sturmian_representative(golden, ZERO, 3)
    assert rep.values == (ZERO, golden, ExactReal(-2, 1, 1, 5))


def test_thue_morse_fixed_point():
    rep = constructions.thue_morse_representative(256)
    half = [v for x in rep.values[:128] for v in constructions._thue_morse_image(x.to_fraction())]
    assert tuple(ExactReal.of(v) for v in half) == rep.values


def test_realize_more_examples():
    example1 = constructions.example1_representative(4)
    relations = {(i, j) for i in range(4) for j in range(4) if example1.values[i] < example1.values[j]}
    assert pattern_of(realize(OrderConstraintSet(4, relations))).ranks == (4, 1, 3, 2)
    assert pattern_of(realize(OrderConstraintSet(3, set()))).ranks == (1, 2, 3)


def test_slow_complexity_first_odd_value():
    rep = constructions.slow_complexity_representative(list(range(1, 10)), 12)
    assert rep.values[1] == ExactReal(1, 0, 4)


def test_slow_complexity_at_scale():
    nk = powers_of_two(1024)
    rep = constructions.slow_complexity_representative(nk, 2048)
    found = constructions.slow_complexity_constraints(nk, 2048)
    assert all(rep.values[i] < rep.values[j] for i, j in found.relations)
    assert detect_perm_period(rep, 16) is None
    profile = perm_complexity_profile(rep, 64)
    assert all(profile[n] <= n for n in range(8, 65))
