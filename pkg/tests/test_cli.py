import json

import pytest
from typer.testing import CliRunner

import main

ROOT2_OVER_4 = "(0+1*sqrt(2))/4"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, stdin=None, **env):
    return runner.invoke(main.app, args, input=stdin, env=env or None)


def json_records(result):
    '''Record lines only; status lines printed to stderr may share the captured output.'''
    return [json.loads(line) for line in result.stdout.splitlines() if line.startswith("{")]


def test_word_gen(runner):
    result = invoke(runner, ["word", "gen", "--slope", ROOT2_OVER_4, "--length", "5"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "00100"


def test_word_gen_invalid_slope(runner):
    result = invoke(runner, ["word", "gen", "--slope", "3/2", "--length", "5"])
    assert result.exit_code == 2


def test_word_factors(runner, five_letter_factors):
    result = invoke(runner, ["word", "factors", "--slope", ROOT2_OVER_4, "--n", "5"])
    assert result.exit_code == 0
    assert set(result.stdout.split()) == five_letter_factors


def test_word_factors_of_a_file(runner, tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("0110\n")
    result = invoke(runner, ["word", "factors", "--word", str(path), "--n", "2"])
    assert result.stdout.split() == ["01", "10", "11"]


def test_word_complexity_exact_json(runner):
    result = invoke(runner, ["word", "complexity", "--slope", ROOT2_OVER_4, "--n-max", "6", "--exact"],
                    STURMLAB_JSON="1")
    assert result.exit_code == 0
    records = json_records(result)
    assert [r["count"] for r in records] == [2, 3, 4, 5, 6, 7]


def test_word_standard(runner):
    result = invoke(runner, ["word", "standard", "--quotients", "1,1,1,1", "--levels", "4", "--json"])
    assert [r["word"] for r in json_records(result)] == ["1", "0", "01", "010", "01001", "01001010"]


def test_perm_gen_example1(runner):
    result = invoke(runner, ["perm", "gen", "example1", "--length", "4"])
    assert result.stdout.split() == ["1", "-1/2", "1/4", "-1/8"]


def test_perm_pipeline(runner):
    values = invoke(runner, ["perm", "gen", "thue-morse", "--length", "8"]).stdout
    result = invoke(runner, ["perm", "underlying"], stdin=values)
    assert result.exit_code == 0
    assert result.stdout.split() == ["0110100"]


def test_perm_gen_to_file(runner, tmp_path):
    path = tmp_path / "rep.txt"
    result = invoke(runner, ["perm", "gen", "sturmian", "--slope", ROOT2_OVER_4, "--length", "3", "--out", str(path)])
    assert result.exit_code == 0
    assert path.read_text().splitlines() == ["0", ROOT2_OVER_4, "(0+1*sqrt(2))/2"]


def test_perm_gen_slow_rejects_bad_sequence(runner):
    result = invoke(runner, ["perm", "gen", "slow", "--length", "8", "--nk", "3,2,5,6"])
    assert result.exit_code == 2


def test_perm_complexity(runner):
    values = "\n".join(str(k) for k in range(20))
    result = invoke(runner, ["perm", "complexity", "--n-max", "3", "--json"], stdin=values)
    assert [r["count"] for r in json_records(result)] == [1, 1, 1]


def test_perm_chart_ascii(runner):
    result = invoke(runner, ["perm", "chart", "--pattern", "4,1,3,2", "--format", "ascii"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[:4] == ["*...", "..*.", "...*", ".*.."]


def test_perm_chart_svg(runner, tmp_path):
    path = tmp_path / "chart.svg"
    result = invoke(runner, ["perm", "chart", "--pattern", "4,1,3,2", "--out", str(path)])
    assert result.exit_code == 0
    assert "<svg" in path.read_text()


def test_perm_period(runner):
    values = invoke(runner, ["perm", "gen", "example1", "--length", "60"]).stdout
    result = invoke(runner, ["perm", "period", "--t-max", "15"], stdin=values)
    assert result.stdout.splitlines()[0] == "preperiod 0 period 2"


def test_perm_estimate(runner):
    result = invoke(runner, ["perm", "estimate", "--index", "1"], stdin="1/4\n1/2\n3/4\n1\n")
    assert result.stdout.splitlines()[0] == "1/4"


def test_perm_duplicate_values(runner):
    result = invoke(runner, ["perm", "underlying"], stdin="1/2\n1/3\n2/4\n")
    assert result.exit_code == 2


def test_perm_monotone_example1_fails(runner):
    values = invoke(runner, ["perm", "gen", "example1", "--length", "100"]).stdout
    result = invoke(runner, ["perm", "monotone", "--n-max", "2", "--json"], stdin=values)
    assert result.exit_code == 1
    by_name = {r["name"]: r for r in json_records(result)}
    assert by_name["chain[N=2,decreasing]"]["params"]["longest"] == 51
    assert by_name["extremals[N=2]"]["status"] == "FAIL"


def test_analyze_discrepancy(runner):
    result = invoke(runner, ["analyze", "discrepancy"], stdin="1/4\n3/4\n")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "1/4"


def test_analyze_report(runner):
    values = invoke(runner, ["perm", "gen", "sturmian", "--slope", ROOT2_OVER_4, "--length", "1000"]).stdout
    result = invoke(runner, ["analyze", "report", "--json"], stdin=values)
    assert result.exit_code == 0
    names = [r["name"] for r in json_records(result)]
    assert names == ["discrepancy[N=10]", "discrepancy[N=100]", "discrepancy[N=1000]", "decreasing-trend"]


def test_verify_decomposition(runner):
    result = invoke(runner, ["verify", "decomposition", "--slope", "(3-1*sqrt(5))/2", "--levels", "3"],
                    STURMLAB_JSON="1")
    assert result.exit_code == 0
    assert {r["status"] for r in json_records(result)} <= {"PASS", "SKIP"}


def test_verify_sturmian_word_table(runner):
    result = invoke(runner, ["verify", "sturmian-word", "--slope", ROOT2_OVER_4, "--depth", "12"])
    assert result.exit_code == 0
    assert "sturmian-word: PASS" in result.stdout


def test_verify_rational_slope(runner):
    result = invoke(runner, ["verify", "sturmian-word", "--slope", "2/5", "--depth", "5"])
    assert result.exit_code == 2


def test_unknown_log_level(runner):
    result = invoke(runner, ["--log-level", "chatty", "perm", "underlying"], stdin="0\n1\n")
    assert result.exit_code == 2
    result = invoke(runner, ["perm", "underlying"], stdin="0\n1\n", STURMLAB_LOG_LEVEL="chatty")
    assert result.exit_code == 2


def test_perm_chart_values_of_a_pattern(runner):
    result = invoke(runner, ["perm", "chart", "--pattern", "2,1", "--values", "--format", "ascii"])
    assert result.exit_code == 2


def test_perm_chart_slow_representative(runner):
    values = invoke(runner, ["perm", "gen", "slow", "--length", "2048", "--nk", "2^k"]).stdout
    result = invoke(runner, ["perm", "chart", "--format", "ascii"], stdin=values)
    assert result.exit_code == 0
    rows = [line for line in result.stdout.splitlines() if line and set(line) <= {".", "*"}]
    assert len(rows) == 2048
