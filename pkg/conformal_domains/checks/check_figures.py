"""
### Figures

The three families of Sigma- geodesics through the chart point (0, 1): null
curves in the (x1 = x4, lambda) plane, semicircles in the (x1, lambda) plane
and hyperbolas in the (x4, lambda) plane.
"""

# Third-Party Libraries
from lxml import etree
# Custom Libraries
import conformal_domains.figures as figures
from conformal_domains.decorators import display, tags

report_display_order = 7

SVG_NAMESPACE = "{http://www.w3.org/2000/svg}"


@tags("figures")
@display(report_display_order=1)
def check_figure_families(reporter):
    """Every default family member passes through (0, 1) within 1e-9 and
    keeps its invariant within 1e-9 at every plotted sample; the SVG parses,
    holds one polyline per member and renders identically twice.
    """
    for number in figures.FIGURE_NUMBERS:
        spec = figures.figure_spec(number)
        curves = figures.figure_curves(spec)
        for curve in curves:
            reporter.assert_within(figures.passage_distance(curve.geodesic), figures.PASSAGE_TOLERANCE,
                                   "Figure {} member {} misses (0, 1)".format(number, curve.value))
            rows = curve.geodesic.trace(spec.samples, spec.lam_range[0], spec.lam_range[1])
            worst = max(curve.geodesic.invariant_residual(row) for row in rows)
            reporter.assert_within(worst, figures.INVARIANT_TOLERANCE,
                                   "Figure {} member {} leaves its invariant".format(number, curve.value))

        command_line = "conformal-domains figure --n {}".format(number)
        svg = figures.render_svg(spec, curves, command_line)
        reporter.assert_fail(svg == figures.render_svg(spec, figures.figure_curves(spec), command_line),
                             "Figure {} does not render reproducibly".format(number))
        document = etree.fromstring(svg.encode("utf-8"))
        polylines = document.findall(".//{}polyline".format(SVG_NAMESPACE))
        reporter.assert_fail(len(polylines) == len(spec.values),
                             "Figure {} has {} polylines for {} members".format(number, len(polylines), len(spec.values)))
