import pytest

from words import (InvalidWord, LengthMismatch, LengthOutOfRange, Period, check_word, complexity_profile,
                   conjugacy_class_key, conjugates, detect_period, factors, is_conjugate, occurrences,
                   special_factors)


def test_factors():
    assert factors("00100", 5).members == {"00100"}
    assert factors("000", 1).members == {"0"}
    assert list(factors("0110", 2)) == ["01", "10", "11"]
    with pytest.raises(LengthOutOfRange):
        factors("01", 3)
    with pytest.raises(LengthOutOfRange):
        factors("01", 0)


def test_check_word():
    assert check_word("0101") == "0101"
    with pytest.raises(InvalidWord):
        check_word("0121")


def test_complexity_profile():
    constant = complexity_profile("0" * 100, 20)
    assert all(constant[n] == 1 for n in range(1, 21))
    alternating = complexity_profile("01" * 50, 30)
    assert alternating[1] == 2
    assert all(alternating[n] == 2 for n in range(2, 31))
    assert constant.prefix_length == 100
    assert constant.as_records()[0] == {"n": 1, "count": 1, "prefix_length": 100}
    with pytest.raises(LengthOutOfRange):
        complexity_profile("0101", 5)


def test_special_factors():
    w = "0" * 100
    found = special_factors(factors(w, 3), factors(w, 4))
    assert found.right == frozenset()
    assert found.left == frozenset()
    w = "0110"
    found = special_factors(factors(w, 1), factors(w, 2))
    assert found.right == {"1"}
    assert found.left == {"1"}
    assert found.bispecial == {"1"}
    with pytest.raises(LengthMismatch):
        special_factors(factors(w, 1), factors(w, 3))


def test_conjugates():
    assert conjugates("10100") == {"10100", "01001", "10010", "00101", "01010"}
    assert conjugates("0000") == {"0000"}
    assert conjugates("") == {""}
    assert is_conjugate("01", "10")
    assert not is_conjugate("01", "11")
    assert not is_conjugate("01", "010")
    assert conjugacy_class_key("10100") == "00101"


def test_conjugate_counts(rng):
    for _ in range(200):
        w = "".join(rng.choice("01") for _ in range(rng.randint(1, 24)))
        found = conjugates(w)
        assert len(w) % len(found) == 0
        assert {v.count("1") for v in found} == {w.count("1")}


def test_detect_period():
    assert detect_period("0" + "01" * 20, 10) == Period(1, 2)
    assert detect_period("0" * 10, 5) == Period(0, 1)
    assert detect_period("0110100110010110", 4) is None
    assert detect_period("0110100110010110", 8) is None
    assert detect_period("0001", 2) is None
    assert detect_period("00010001", 4) == Period(0, 4)


def brute_period(w, t_max):
    for t in range(1, min(t_max, len(w) - 1) + 1):
        start = next(s for s in range(len(w) - t + 1) if all(w[i] == w[i + t] for i in range(s, len(w) - t)))
        if start <= t_max and len(w) - start >= 2 * t:
            return Period(start, t)
    return None


def test_detect_period_matches_brute_force(rng):
    for _ in range(500):
        size = rng.randint(1, 200)
        if rng.random() < 0.5:
            w = "".join(rng.choice("01") for _ in range(size))
        else:
            block = "".join(rng.choice("01") for _ in range(rng.randint(1, 6)))
            head = "".join(rng.choice("01") for _ in range(rng.randint(0, 5)))
            w = (head + block * size)[:size]
        t_max = max(1, size // 2)
        assert detect_period(w, t_max) == brute_period(w, t_max)


def test_occurrences():
    assert occurrences("01001", "0") == [0, 2, 3]
    assert occurrences("010010", "010") == [0, 3]
    assert occurrences("111", "0") == []
    assert occurrences("0000", "00") == [0, 1, 2]
    with pytest.raises(LengthOutOfRange):
        occurrences("01", "")
