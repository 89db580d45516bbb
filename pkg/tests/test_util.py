import io

import pytest

import econfig
import util


def test_parse_nk():
    assert util.parse_nk("2^k", 4) == [2, 4, 8, 16]
    assert util.parse_nk("3*k", 3) == [3, 6, 9]
    assert util.parse_nk("1, 5, 9", 10) == [1, 5, 9]
    with pytest.raises(ValueError):
        util.parse_nk("k^2", 3)


def test_parse_int_list():
    assert util.parse_int_list("1,1,4") == [1, 1, 4]
    with pytest.raises(ValueError):
        util.parse_int_list("1,,4")


def test_read_and_write_lines(tmp_path, monkeypatch):
    path = tmp_path / "values.txt"
    util.write_lines(["1/2", "1/3"], str(path))
    assert path.read_text() == "1/2\n1/3\n"
    path.write_text("  1/2\n\n1/3  \n")
    assert util.read_lines(str(path)) == ["1/2", "1/3"]
    monkeypatch.setattr("sys.stdin", io.StringIO("0\n1\n"))
    assert util.read_lines("-") == ["0", "1"]


def test_lab_exception_message():
    e = util.LabException("bad input")
    assert e.message == "bad input"
    assert str(e) == "bad input"


def test_get_int(monkeypatch):
    monkeypatch.delenv(econfig.STURMLAB_CHART_WIDTH, raising=False)
    assert econfig.get_int(econfig.STURMLAB_CHART_WIDTH, 7) == 7
    monkeypatch.setenv(econfig.STURMLAB_CHART_WIDTH, "640")
    assert econfig.get_int(econfig.STURMLAB_CHART_WIDTH, 7) == 640
    assert econfig.get_int(econfig.STURMLAB_CHART_WIDTH, 7, override=3) == 3


def test_seed(monkeypatch):
    monkeypatch.delenv(econfig.STURMLAB_SEED, raising=False)
    assert econfig.seed() == econfig.DEFAULT_SEED
    assert econfig.seed(5) == 5
    monkeypatch.setenv(econfig.STURMLAB_SEED, "11")
    assert econfig.seed() == 11
