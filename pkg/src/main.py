import contextlib
import enum
import json
import logging
import typing as t

import typer
from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

import analysis
import charts
import constructions
import econfig
import exactreal
import permutations
import sturmian
import util
import words

econfig.load_env()


TABLE_BOX_STYE = box.SIMPLE_HEAD

out_console = Console()
err_console = Console(stderr=True)

app = typer.Typer(rich_markup_mode="rich", no_args_is_help=True)
word_app = typer.Typer(no_args_is_help=True, help="Sturmian and finite words")
perm_app = typer.Typer(no_args_is_help=True, help="Permutation prefixes")
perm_gen_app = typer.Typer(no_args_is_help=True, help="Build a representative")
analyze_app = typer.Typer(no_args_is_help=True, help="Equidistribution diagnostics")
verify_app = typer.Typer(no_args_is_help=True, help="Verification reports")
app.add_typer(word_app, name="word")
app.add_typer(perm_app, name="perm")
perm_app.add_typer(perm_gen_app, name="gen")
app.add_typer(analyze_app, name="analyze")
app.add_typer(verify_app, name="verify")


class ChartFormat(enum.Enum):
    SVG = "svg"
    ASCII = "ascii"


SlopeOpt = t.Annotated[str, typer.Option("--slope", help="Slope as INT/INT or (INT+INT*sqrt(INT))/INT")]
InterceptOpt = t.Annotated[str, typer.Option("--intercept", help="Intercept, same grammar as the slope")]
ConventionOpt = t.Annotated[sturmian.Convention, typer.Option("--convention", help="Interval convention")]
InputOpt = t.Annotated[str, typer.Option("--input", "-i", help="Representative file, one exact real per line; - for stdin")]
JsonOpt = t.Annotated[bool, typer.Option("--json", envvar=econfig.STURMLAB_JSON, help="Machine-readable records")]
OutOpt = t.Annotated[str, typer.Option("--out", help="Write the result to PATH")]


@app.callback()
def main(
    log_level: t.Annotated[str, typer.Option("--log-level", envvar=econfig.STURMLAB_LOG_LEVEL, help="Logging level")] = econfig.DEFAULT_LOG_LEVEL,
):
    """
    Sturmian words, infinite permutations and their complexity, computed exactly.
    """
    if log_level.upper() not in logging.getLevelNamesMapping():
        raise typer.BadParameter(f"unknown logging level '{log_level}'", param_hint="--log-level")
    logging.basicConfig(level=log_level.upper(), format="%(message)s", force=True,
                        handlers=[RichHandler(console=err_console, show_time=False, show_path=False)])
    logging.captureWarnings(True)


@contextlib.contextmanager
def lab_errors():
    '''Turn library errors into a message on stderr and exit code 2.'''
    try:
        yield
    except (util.LabException, ValueError) as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(code=2)


def emit_lines(lines: list[str], out: str | None):
    if out:
        util.write_lines(lines, out)
        err_console.print(f"Wrote {len(lines)} lines to {out}")
        return
    for line in lines:
        typer.echo(line)


def emit_records(title: str, columns: list[str], records: list[dict], as_json: bool, out: str | None):
    if as_json:
        emit_lines([json.dumps(r) for r in records], out)
        return
    if out:
        emit_lines(["\t".join(columns)] + ["\t".join(str(r[c]) for c in columns) for r in records], out)
        return
    table = Table(*columns, title=title, box=TABLE_BOX_STYE)
    for r in records:
        table.add_row(*(str(r[c]) for c in columns))
    out_console.print(table)


def emit_report(report: analysis.VerificationReport, as_json: bool, out: str | None):
    records = report.as_records()
    if as_json:
        emit_lines([json.dumps(r) for r in records], out)
    else:
        rows = [{**r, "witness": r["witness"] or ""} for r in records]
        emit_records(report.title, ["name", "status", "instances", "witness"], rows, False, out)
    summary = ", ".join(f"{k} {v}" for k, v in report.summary().items())
    if not as_json and not out:
        typer.echo(f"{report.title}: {summary}")
        if report.note:
            typer.echo(report.note)
    else:
        err_console.print(f"{report.title}: {summary}")
    if not report.ok:
        raise typer.Exit(code=1)


def read_rep(path: str) -> permutations.Representative:
    return permutations.read_representative(util.read_lines(path))


#
# word
#
@word_app.command("gen")
def word_gen(
    slope: SlopeOpt,
    length: t.Annotated[int, typer.Option("--length", help="Number of letters")],
    intercept: InterceptOpt = "0",
    convention: ConventionOpt = sturmian.Convention.LOWER,
    out: OutOpt = None,
):
    """Print a prefix of the Sturmian word of the given slope and intercept."""
    with lab_errors():
        spec = sturmian.SturmianSpec(exactreal.parse(slope), exactreal.parse(intercept), convention)
        emit_lines([sturmian.generate(spec, length)], out)


@word_app.command("factors")
def word_factors(
    n: t.Annotated[int, typer.Option("--n", help="Factor length")],
    slope: t.Annotated[str, typer.Option("--slope", help="Enumerate exactly for this slope")] = None,
    word_file: t.Annotated[str, typer.Option("--word", help="Scan the word in this file instead")] = None,
    out: OutOpt = None,
):
    """
    The factors of length n, one per line.

    With [bold yellow]--slope[/bold yellow] the set is enumerated exactly from the circle partition;
    with [bold yellow]--word[/bold yellow] the factors of the given word are listed.
    """
    with lab_errors():
        if word_file:
            found = words.factors(words.check_word("".join(util.read_lines(word_file))), n)
        elif slope:
            found = sturmian.enumerate_factors_exact(exactreal.parse(slope), n)
        else:
            raise ValueError("give --slope or --word")
        emit_lines(list(found), out)


@word_app.command("complexity")
def word_complexity(
    n_max: t.Annotated[int, typer.Option("--n-max", help="Largest factor length")],
    slope: t.Annotated[str, typer.Option("--slope", help="Slope of a generated prefix")] = None,
    prefix_length: t.Annotated[int, typer.Option("--prefix-length", help="Letters to generate")] = 20000,
    word_file: t.Annotated[str, typer.Option("--word", help="Read the word from this file")] = None,
    exact: t.Annotated[bool, typer.Option("--exact", help="Count exact factor sets instead of a prefix")] = False,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Factor counts p(n), n = 1..n_max, observed on a prefix (or exact with --exact)."""
    with lab_errors():
        if word_file:
            profile = words.complexity_profile(words.check_word("".join(util.read_lines(word_file))), n_max)
            records = profile.as_records()
        elif slope and exact:
            sets = sturmian.exact_factor_sets(exactreal.parse(slope), n_max)
            records = [{"n": n, "count": len(sets[n]), "prefix_length": "exact"} for n in range(1, n_max + 1)]
        elif slope:
            spec = sturmian.SturmianSpec(exactreal.parse(slope))
            records = words.complexity_profile(sturmian.generate(spec, prefix_length), n_max).as_records()
        else:
            raise ValueError("give --slope or --word")
        emit_records("complexity", ["n", "count", "prefix_length"], records, as_json, out)


@word_app.command("standard")
def word_standard(
    levels: t.Annotated[int, typer.Option("--levels", help="Top level m of the tower")],
    slope: t.Annotated[str, typer.Option("--slope", help="Take the quotients from this slope")] = None,
    quotients: t.Annotated[str, typer.Option("--quotients", help="Comma list d_1,d_2,...")] = None,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """The standard words s_-1, s_0, ..., s_m."""
    with lab_errors():
        if quotients:
            tower = sturmian.standard_tower(util.parse_int_list(quotients), levels)
        elif slope:
            tower = sturmian.tower_for_slope(exactreal.parse(slope), levels)
        else:
            raise ValueError("give --slope or --quotients")
        records = [{"level": n, "d": tower.d(n) if n >= 1 else "", "word": tower.s(n)} for n in range(-1, tower.top + 1)]
        emit_records("standard words", ["level", "d", "word"], records, as_json, out)


@word_app.command("christoffel")
def word_christoffel(
    slope: SlopeOpt,
    n_max: t.Annotated[int, typer.Option("--n-max", help="Longest prefix considered")] = 100,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Christoffel prefixes of the slope's word, one per running extremum of the orbit of 0."""
    with lab_errors():
        prefixes = sturmian.christoffel_prefixes(exactreal.parse(slope), n_max)
        records = [{"length": p.length, "kind": p.kind, "word": p.word} for p in prefixes]
        emit_records("christoffel prefixes", ["length", "kind", "word"], records, as_json, out)


@word_app.command("factorize")
def word_factorize(
    slope: SlopeOpt,
    level: t.Annotated[int, typer.Option("--level", help="Tower level n")],
    length: t.Annotated[int, typer.Option("--length", help="Prefix length")] = 200,
    intercept: InterceptOpt = "0",
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Decompose a prefix into blocks s_n^k s_(n-1)."""
    with lab_errors():
        sigma = exactreal.parse(slope)
        word = sturmian.generate(sturmian.SturmianSpec(sigma, exactreal.parse(intercept)), length)
        tower = sturmian.tower_for_slope(sigma, level + 1)
        found = sturmian.factorize(word, tower, level)
        record = {"level": found.level, "prefix": found.prefix, "exponents": list(found.exponents),
                  "residue": found.residue}
        if as_json:
            emit_lines([json.dumps(record)], out)
            return
        lines = [f"prefix: {found.prefix}"]
        lines += [f"k={k}: {block}" for k, block in zip(found.exponents, found.blocks)]
        lines.append(f"residue: {found.residue}")
        emit_lines(lines, out)


#
# perm gen
#
@perm_gen_app.command("sturmian")
def gen_sturmian(
    slope: SlopeOpt,
    length: t.Annotated[int, typer.Option("--length", help="Number of values")],
    intercept: InterceptOpt = "0",
    convention: ConventionOpt = sturmian.Convention.LOWER,
    out: OutOpt = None,
):
    """values[n] = {intercept + n*slope}."""
    with lab_errors():
        rep = constructions.sturmian_representative(exactreal.parse(slope), exactreal.parse(intercept), length, convention)
        emit_lines(permutations.format_representative(rep), out)


@perm_gen_app.command("thue-morse")
def gen_thue_morse(
    length: t.Annotated[int, typer.Option("--length", help="Number of values")],
    out: OutOpt = None,
):
    with lab_errors():
        emit_lines(permutations.format_representative(constructions.thue_morse_representative(length)), out)


@perm_gen_app.command("example1")
def gen_example1(
    length: t.Annotated[int, typer.Option("--length", help="Number of values")],
    variant: t.Annotated[constructions.Example1Variant, typer.Option("--variant", help="a: (-1/2)^n, b: 1000+(-1/3)^n")] = constructions.Example1Variant.A,
    out: OutOpt = None,
):
    with lab_errors():
        emit_lines(permutations.format_representative(constructions.example1_representative(length, variant)), out)


@perm_gen_app.command("slow")
def gen_slow(
    length: t.Annotated[int, typer.Option("--length", help="Number of values")],
    nk: t.Annotated[str, typer.Option("--nk", help="n_k as B^k, C*k or a comma list")] = "2^k",
    out: OutOpt = None,
):
    """The slow-complexity permutation for the index sequence n_k."""
    with lab_errors():
        rep = constructions.slow_complexity_representative(util.parse_nk(nk, length // 2), length)
        emit_lines(permutations.format_representative(rep), out)


#
# perm
#
@perm_app.command("complexity")
def perm_complexity(
    n_max: t.Annotated[int, typer.Option("--n-max", help="Largest window length")],
    input_path: InputOpt = "-",
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Distinct patterns among all windows of length n, n = 1..n_max."""
    with lab_errors():
        profile = permutations.perm_complexity_profile(read_rep(input_path), n_max)
        emit_records("permutation complexity", ["n", "count", "prefix_length"], profile.as_records(), as_json, out)


@perm_app.command("underlying")
def perm_underlying(
    input_path: InputOpt = "-",
    out: OutOpt = None,
):
    """The ascent/descent word: 0 where the next value is larger."""
    with lab_errors():
        emit_lines([permutations.underlying_word(read_rep(input_path))], out)


@perm_app.command("chart")
def perm_chart(
    input_path: InputOpt = None,
    pattern: t.Annotated[str, typer.Option("--pattern", help="Chart a pattern such as 4,1,3,2")] = None,
    chart_format: t.Annotated[ChartFormat, typer.Option("--format", help="svg or ascii")] = ChartFormat.SVG,
    values: t.Annotated[bool, typer.Option("--values", help="Place points by value instead of rank")] = False,
    width: t.Annotated[int, typer.Option("--width", envvar=econfig.STURMLAB_CHART_WIDTH)] = econfig.DEFAULT_CHART_WIDTH,
    height: t.Annotated[int, typer.Option("--height", envvar=econfig.STURMLAB_CHART_HEIGHT)] = econfig.DEFAULT_CHART_HEIGHT,
    out: OutOpt = None,
):
    """Draw a permutation prefix: larger elements sit higher."""
    with lab_errors():
        source = permutations.parse_pattern(pattern) if pattern else read_rep(input_path or "-")
        doc = charts.build_chart(source, width=width, height=height, use_values=values)
        text = charts.render_svg(doc) if chart_format is ChartFormat.SVG else charts.render_ascii(doc)
        emit_lines(text.rstrip("\n").split("\n"), out)


@perm_app.command("monotone")
def perm_monotone(
    n_max: t.Annotated[int, typer.Option("--n-max", help="Largest gap N")] = 4,
    input_path: InputOpt = "-",
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Longest N-monotone chains and N-extremal elements for N = 1..n_max."""
    with lab_errors():
        report = analysis.monotone_diagnostics(read_rep(input_path), n_max)
    emit_report(report, as_json, out)


@perm_app.command("extremal")
def perm_extremal(
    n: t.Annotated[int, typer.Option("--n", help="Neighbourhood radius N")],
    input_path: InputOpt = "-",
    strict_left: t.Annotated[bool, typer.Option("--strict-left", help="Require i > N")] = False,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Positions exceeding (or below) every value within distance N."""
    with lab_errors():
        found = permutations.find_N_extremal(read_rep(input_path), n, strict_left=strict_left)
        records = [{"kind": "maximal", "index": i} for i in found.maximal]
        records += [{"kind": "minimal", "index": i} for i in found.minimal]
        emit_records(f"{n}-extremal elements", ["kind", "index"], records, as_json, out)


@perm_app.command("estimate")
def perm_estimate(
    index: t.Annotated[int, typer.Option("--index", help="Position i")],
    input_path: InputOpt = "-",
):
    """Share of values below values[i], the finite estimate of the canonical value."""
    with lab_errors():
        estimate = permutations.canonical_estimate(read_rep(input_path), index)
        typer.echo(str(estimate))


@perm_app.command("period")
def perm_period(
    t_max: t.Annotated[int, typer.Option("--t-max", help="Largest period tried")],
    max_preperiod: t.Annotated[int, typer.Option("--max-preperiod", help="Largest preperiod accepted")] = None,
    input_path: InputOpt = "-",
):
    """Smallest period of the order, with its preperiod, or 'none'."""
    with lab_errors():
        found = permutations.detect_perm_period(read_rep(input_path), t_max, max_preperiod)
        typer.echo("none" if found is None else f"preperiod {found.preperiod} period {found.period}")


#
# analyze
#
@analyze_app.command("discrepancy")
def analyze_discrepancy(
    input_path: InputOpt = "-",
):
    """Exact star discrepancy of the values."""
    with lab_errors():
        d = analysis.star_discrepancy(read_rep(input_path).values)
        typer.echo(f"{d}")
        err_console.print(f"D* ~ {float(d):.8f}")


@analyze_app.command("report")
def analyze_report(
    input_path: InputOpt = "-",
    schedule: t.Annotated[str, typer.Option("--schedule", help="Prefix lengths as B^k, C*k or a comma list")] = "10^k",
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Star discrepancy along a schedule of prefix lengths."""
    with lab_errors():
        rep = read_rep(input_path)
        steps = [n for n in util.parse_nk(schedule, max(len(rep).bit_length(), 1)) if n <= len(rep)]
        report = analysis.equidistribution_report(rep, steps)
    emit_report(report, as_json, out)


#
# verify
#
@verify_app.command("sturmian-word")
def verify_sturmian_word(
    slope: SlopeOpt,
    depth: t.Annotated[int, typer.Option("--depth", help="Largest factor length")] = 50,
    prefix_length: t.Annotated[int, typer.Option("--prefix-length", help="Letters of the scanned prefix")] = None,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    with lab_errors():
        report = analysis.verify_sturmian_word(exactreal.parse(slope), depth, prefix_length)
    emit_report(report, as_json, out)


@verify_app.command("sturmian-perm")
def verify_sturmian_perm(
    slope: SlopeOpt,
    intercept: InterceptOpt = "0",
    depth: t.Annotated[int, typer.Option("--depth", help="Largest window length")] = 100,
    length: t.Annotated[int, typer.Option("--length", help="Representative length")] = 10000,
    seed: t.Annotated[int, typer.Option("--seed", envvar=econfig.STURMLAB_SEED, help="Seed for pair sampling")] = econfig.DEFAULT_SEED,
    convention: ConventionOpt = sturmian.Convention.LOWER,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    with lab_errors():
        report = analysis.verify_sturmian_permutation(exactreal.parse(slope), exactreal.parse(intercept),
                                                      depth, length, seed=seed, convention=convention)
    emit_report(report, as_json, out)


@verify_app.command("decomposition")
def verify_decomposition(
    slope: SlopeOpt,
    levels: t.Annotated[int, typer.Option("--levels", help="Deepest tower level")] = 6,
    length: t.Annotated[int, typer.Option("--length", help="Prefix length")] = 5000,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    with lab_errors():
        report = analysis.verify_decomposition(exactreal.parse(slope), levels, length)
    emit_report(report, as_json, out)


GOLDEN = "(-1+1*sqrt(5))/2"
FIBONACCI = "(3-1*sqrt(5))/2"
ROOT2_OVER_4 = "(0+1*sqrt(2))/4"


@verify_app.command("all")
def verify_all(
    seed: t.Annotated[int, typer.Option("--seed", envvar=econfig.STURMLAB_SEED, help="Seed for pair sampling")] = econfig.DEFAULT_SEED,
    as_json: JsonOpt = False,
    out: OutOpt = None,
):
    """Run every verification at its default size."""
    with lab_errors():
        reports = [
            analysis.verify_sturmian_word(exactreal.parse(GOLDEN), 100),
            analysis.verify_sturmian_word(exactreal.parse(ROOT2_OVER_4), 50),
            analysis.verify_sturmian_permutation(exactreal.parse(GOLDEN), exactreal.parse("1/3"), 100, 10000, seed=seed),
            analysis.verify_decomposition(exactreal.parse(FIBONACCI), 6, 5000),
            analysis.verify_decomposition(exactreal.parse(ROOT2_OVER_4), 4, 5000),
        ]
    combined = analysis.VerificationReport("all")
    for report in reports:
        for check in report.checks:
            check.name = f"{report.title}/{check.name}"
            combined.checks.append(check)
    emit_report(combined, as_json, out)


if __name__ == "__main__":
    app()
