'''
Charts of permutation prefixes: one point per index, higher points for
larger elements.  Vertical placement uses ranks unless values are asked for.
'''
import dataclasses
import io
import logging

import matplotlib
from matplotlib.figure import Figure

import econfig
from permutations import Pattern, Representative
from util import LabException

logger = logging.getLogger(__name__)

DPI = 100
SVG_HASH_SALT = "sturmlab"


class EmptyInput(LabException):
    pass


class ValuesUnavailable(LabException):
    pass


@dataclasses.dataclass(frozen=True)
class ChartPoint():
    index: int
    rank: int
    value: float | None = None


@dataclasses.dataclass(frozen=True)
class ChartDocument():
    points: tuple[ChartPoint, ...]
    width: int = econfig.DEFAULT_CHART_WIDTH
    height: int = econfig.DEFAULT_CHART_HEIGHT
    margin: float = 0.08
    radius: float = 3.0
    axes: bool = True
    use_values: bool = False

    def __post_init__(self):
        if not self.points:
            raise EmptyInput("a chart needs at least one point")
        if [p.index for p in self.points] != list(range(len(self.points))):
            raise ValueError("chart indices must run 0, 1, 2, ... without gaps")


def build_chart(source: Representative | Pattern, width: int | None = None, height: int | None = None,
                use_values: bool = False, axes: bool = True) -> ChartDocument:
    if len(source) == 0:
        raise EmptyInput("nothing to chart")
    if isinstance(source, Pattern):
        if use_values:
            raise ValuesUnavailable("a pattern carries ranks only, no values")
        points = tuple(ChartPoint(i, r - 1) for i, r in enumerate(source.ranks))
    else:
        points = tuple(ChartPoint(i, int(r), float(v) if use_values else None)
                       for i, (r, v) in enumerate(zip(source.order, source.values)))
    width = econfig.get_int(econfig.STURMLAB_CHART_WIDTH, econfig.DEFAULT_CHART_WIDTH, override=width)
    height = econfig.get_int(econfig.STURMLAB_CHART_HEIGHT, econfig.DEFAULT_CHART_HEIGHT, override=height)
    return ChartDocument(points, width=width, height=height, axes=axes, use_values=use_values)


def render_svg(doc: ChartDocument) -> str:
    '''SVG 1.1; identical bytes for identical documents.'''
    xs = [p.index for p in doc.points]
    ys = [p.value if doc.use_values else p.rank for p in doc.points]
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig = Figure(figsize=(doc.width / DPI, doc.height / DPI), dpi=DPI)
        ax = fig.add_axes((doc.margin, doc.margin, 1 - 2 * doc.margin, 1 - 2 * doc.margin))
        ax.plot(xs, ys, linestyle="none", marker="o", markersize=doc.radius, color="black")
        if len(xs) == 1:
            ax.set_xlim(-1, 1)
        if doc.axes:
            ax.set_xlabel("index")
            ax.set_ylabel("value" if doc.use_values else "rank")
        else:
            ax.set_axis_off()
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug("rendered %d points as svg", len(xs))
    text = buffer.getvalue()
    return text if text.endswith("\n") else text + "\n"


def render_ascii(doc: ChartDocument) -> str:
    '''One column per index and one row per rank, highest rank on top.'''
    top = max(p.rank for p in doc.points)
    rows = []
    for rank in range(top, -1, -1):
        rows.append("".join("*" if p.rank == rank else "." for p in doc.points))
    return "\n".join(rows) + "\n"
