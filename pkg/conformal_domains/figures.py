"""Families of Sigma- geodesics through the chart point (x, lam) = (0, 1),
drawn in a lambda plane and rendered as SVG.

* Figure 1: null geodesics x1 = x4 = a (lam^2 - 1) in the (x1 = x4, lam) plane
* Figure 2: semicircles (x1 - x0)^2 + lam^2 = x0^2 + 1 in the (x1, lam) plane
* Figure 3: hyperbolas (x4 - x0)^2 - lam^2 = x0^2 - 1, |x0| >= 1, in the
  (x4, lam) plane; x0 = +-1 gives the straight lines x4 = x0 -+ lam

Curves are sampled from the closed forms, never integrated, and every curve
is checked to pass through (0, 1) and to satisfy its algebraic relation at
every sample before anything is rendered.
"""

# Python Standard Libraries
import collections
import concurrent.futures
import logging
import math
import os
import re
# Third-Party Libraries
import jinja2
import numpy as np
from lxml import etree
# Custom Libraries
import conformal_domains.geodesics as geodesics
import conformal_domains.version as version

logger = logging.getLogger(__name__)

FIGURE_NUMBERS = [1, 2, 3]
DEFAULT_SAMPLES = 201
PASSAGE_TOLERANCE = 1e-9
INVARIANT_TOLERANCE = 1e-9

DEFAULT_VALUES = {
    1: [float(value) for value in np.linspace(-1.0, 1.0, 11)],
    2: [float(value) for value in np.linspace(-2.5, 2.5, 11)],
    3: [-3.0, -2.5, -2.0, -1.5, -1.25, -1.0, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0],
}
DEFAULT_X_RANGES = {1: (-3.0, 3.0), 2: (-5.5, 5.5), 3: (-3.0, 3.0)}
DEFAULT_LAMBDA_RANGES = {1: (0.0, 2.0), 2: (0.0, 3.0), 3: (0.0, 3.0)}

# Minkowski axis drawn horizontally and its label
HORIZONTAL_AXES = {1: 0, 2: 0, 3: 3}
AXIS_LABELS = {1: "x1 = x4", 2: "x1", 3: "x4"}

WIDTH = 640
HEIGHT = 400
MARGIN = 48
MAX_TICKS = 12
TICK_STEPS = [0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0]


class FigureSpec(collections.namedtuple('FigureSpec', ['number', 'values', 'samples', 'x_range', 'lam_range'])):
    """A figure number with its family parameters and plot ranges.

    `values` are the a of Figure 1 and the x0 of Figures 2 and 3.
    """
    __slots__ = ()


class FigureCurve(collections.namedtuple('FigureCurve', ['value', 'geodesic', 'points'])):
    """One family member: its parameter, its closed form and its plotted
    (horizontal, lam) points.
    """
    __slots__ = ()


def _require_range(bounds, label):
    low, high = (float(bound) for bound in bounds)
    if not (np.isfinite(low) and np.isfinite(high)) or low >= high:
        raise ValueError("The {} range must be finite with low < high, got ({}, {})".format(label, low, high))
    return low, high


def figure_spec(number, values=None, samples=None, x_range=None, lam_range=None):
    """Returns the FigureSpec of a figure with the defaults filled in.

    Raises:
        ValueError: unknown figure, degenerate ranges, fewer than 2 samples,
            or an empty or non-finite value list.
    """
    if number not in FIGURE_NUMBERS:
        raise ValueError("Figures are numbered {}, got {}".format(FIGURE_NUMBERS, number))
    values = DEFAULT_VALUES[number] if values is None else [float(value) for value in values]
    if not values or not np.all(np.isfinite(values)):
        raise ValueError("Figure {} needs a non-empty list of finite values, got {}".format(number, values))
    samples = DEFAULT_SAMPLES if samples is None else int(samples)
    if samples < 2:
        raise ValueError("A curve needs at least 2 samples, got {}".format(samples))
    x_range = _require_range(DEFAULT_X_RANGES[number] if x_range is None else x_range, "x")
    lam_range = _require_range(DEFAULT_LAMBDA_RANGES[number] if lam_range is None else lam_range, "lambda")
    if lam_range[0] < 0.0:
        raise ValueError("The lambda range cannot start below 0, got {}".format(lam_range[0]))
    return FigureSpec(number, values, samples, x_range, lam_range)


def family_member(number, value):
    """Returns the closed-form geodesic of a figure for one parameter value."""
    if number == 1:
        direction = np.array(geodesics.DEFAULT_DIRECTIONS[geodesics.NULL_PARABOLA])
        return geodesics.closed_form_geodesic(geodesics.NULL_PARABOLA, a=value, center=-value * direction)
    if number == 2:
        return geodesics.closed_form_geodesic(geodesics.SPACELIKE_SEMICIRCLE, a=math.hypot(value, 1.0),
                                              center=(value, 0.0, 0.0, 0.0))
    if number == 3:
        if abs(value) < 1.0:
            raise ValueError("Figure 3 needs |x0| >= 1, got {}".format(value))
        return geodesics.closed_form_geodesic(geodesics.TIMELIKE_HYPERBOLA, a=math.sqrt(value * value - 1.0),
                                              center=(0.0, 0.0, 0.0, value), branch=-1 if value > 0.0 else 1)
    raise ValueError("Figures are numbered {}, got {}".format(FIGURE_NUMBERS, number))


def passage_distance(geodesic):
    """Returns the distance of the curve from the chart point (0, 1).

    For the lambda graphs this is max |x(1)|. The semicircle has no single
    x(1), so the distance of the origin from its circle is used instead.
    """
    if geodesic.kind != geodesics.SPACELIKE_SEMICIRCLE:
        return float(np.max(np.abs(geodesic.coordinates(1.0)[:4])))
    displacement = -geodesic.center
    along = geodesic.plane_coordinate(np.zeros(4))
    perpendicular = float(np.max(np.abs(displacement - along * geodesic.direction)))
    return abs(math.hypot(along, 1.0) - abs(geodesic.a)) + perpendicular


def _build_curve(spec, value):
    geodesic = family_member(spec.number, value)
    distance = passage_distance(geodesic)
    if distance > PASSAGE_TOLERANCE:
        error_output = ("Figure {} member {} misses (0, 1) by {}."
                        ).format(spec.number, value, distance)
        raise ValueError(error_output)

    rows = geodesic.trace(spec.samples, spec.lam_range[0], spec.lam_range[1])
    worst = max(geodesic.invariant_residual(row) for row in rows)
    if worst > INVARIANT_TOLERANCE:
        error_output = ("Figure {} member {} violates its invariant by {}."
                        ).format(spec.number, value, worst)
        raise ValueError(error_output)

    axis = HORIZONTAL_AXES[spec.number]
    logger.debug("Figure {} member {}: passage {}, invariant {}".format(spec.number, value, distance, worst))
    return FigureCurve(value, geodesic, np.column_stack([rows[:, axis], rows[:, 4]]))


def figure_curves(spec, parallel=1):
    """Returns the FigureCurves of a figure in the order of spec.values.

    Members are built on `parallel` threads.

    Raises:
        ValueError: a member misses (0, 1) or violates its invariant beyond
            1e-9.
    """
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, int(parallel))) as executor:
        return list(executor.map(lambda value: _build_curve(spec, value), spec.values))


def _ticks(low, high, to_canvas):
    span = high - low
    step = next((step for step in TICK_STEPS if span / step <= MAX_TICKS), TICK_STEPS[-1])
    first = math.ceil(low / step - 1e-9)
    last = math.floor(high / step + 1e-9)
    ticks = []
    for index in range(int(first), int(last) + 1):
        value = index * step + 0.0
        ticks.append({"position": "{:.3f}".format(to_canvas(value)), "label": "{:g}".format(value)})
    return ticks


def comment_text(text):
    """Returns text with no "--" inside and no trailing "-", as an XML
    comment requires.
    """
    text = re.sub(r"-(?=-)", "- ", text)
    return text + " " if text.endswith("-") else text


def render_svg(spec, curves, command_line):
    """Renders the curves of a figure with the figure.svg template.

    The generating command line is recorded in the SVG metadata element and
    in a comment, where runs of dashes are split by spaces. The output is
    parsed with lxml before it is returned.

    Raises:
        ValueError: the rendered document is not well-formed XML.
    """
    x_low, x_high = spec.x_range
    lam_low, lam_high = spec.lam_range
    left, right = MARGIN, WIDTH - MARGIN
    top, bottom = MARGIN, HEIGHT - MARGIN

    def horizontal(value):
        return left + (value - x_low) / (x_high - x_low) * (right - left)

    def vertical(value):
        return bottom - (value - lam_low) / (lam_high - lam_low) * (bottom - top)

    vertical_axis = horizontal(0.0) if x_low <= 0.0 <= x_high else left
    axes = {
        "horizontal": bottom,
        "horizontal_tick": bottom + 5,
        "horizontal_label": bottom + 18,
        "horizontal_title": bottom + 34,
        "vertical": "{:.3f}".format(vertical_axis),
        "vertical_tick": "{:.3f}".format(vertical_axis - 5),
        "vertical_label": "{:.3f}".format(vertical_axis - 8),
        "vertical_title": top - 12,
    }
    rendered_curves = []
    for curve in curves:
        points = " ".join("{:.3f},{:.3f}".format(horizontal(x), vertical(lam)) for x, lam in curve.points)
        rendered_curves.append({"label": "{:g}".format(curve.value), "points": points})

    current_directory = os.path.dirname(os.path.realpath(__file__))
    template_directory_path = os.path.join(current_directory, "templates")
    template_loader = jinja2.FileSystemLoader(template_directory_path)
    env = jinja2.Environment(loader=template_loader, autoescape=True)
    template = env.get_template("figure.svg")

    title = "Figure {}: geodesics of Sigma- through (0, 1) in the ({}, lambda) plane".format(
        spec.number, AXIS_LABELS[spec.number])
    svg = template.render(version=version.__version__,
                          width=WIDTH,
                          height=HEIGHT,
                          title=title,
                          command_line=command_line,
                          command_comment=comment_text(command_line),
                          plot={"left": left, "right": right, "top": top, "bottom": bottom,
                                "width": right - left, "height": bottom - top},
                          axes=axes,
                          x_ticks=_ticks(x_low, x_high, horizontal),
                          lam_ticks=_ticks(lam_low, lam_high, vertical),
                          x_label=AXIS_LABELS[spec.number],
                          curves=rendered_curves,
                          passage={"x": "{:.3f}".format(horizontal(0.0)), "y": "{:.3f}".format(vertical(1.0))})
    svg = svg + "\n" if not svg.endswith("\n") else svg
    try:
        etree.fromstring(svg.encode("utf-8"))
    except etree.XMLSyntaxError as exception:
        raise ValueError("The rendered figure is not well-formed XML: {}".format(exception))
    return svg
