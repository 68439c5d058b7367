"""
### Action of O(4,2)

Generators of O(4,2), their action on R^{4,2}, on the half-space charts,
where they are isometries, and on Minkowski space, where they are conformal.

Isometry trials draw chart points with |x| <= 1 and lambda in [0.5, 2] and
keep the group elements whose image stays within lambda in [0.2, 5] and
|x| <= 10, so the difference stencils stay inside one chart.
"""

# Python Standard Libraries
import logging
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
import conformal_domains.geodesics as geodesics
import conformal_domains.group_action as group_action
from conformal_domains.decorators import display, tags, trials

logger = logging.getLogger(__name__)

report_display_order = 5

ISOMETRY_PATH_RANGE = 0.5
ISOMETRY_PATH_STEP = 5e-3
ISOMETRY_VELOCITY_BOUND = 0.25


@tags("group_action", "algebra")
@display(report_display_order=1)
@trials(1000, cap=10000)
def check_generators_preserve_scalar_product(reporter, sampler, trials):
    """Products of random generators satisfy M^T G M = G, and G M^T G inverts
    them.
    """
    for index in range(trials):
        matrix, specs = sampler.group_element()
        reporter.assert_within(group_action.conformal_residual(matrix), 1e-12,
                               "{} leaves O(4,2) at trial {}".format(specs, index))
        product = group_action.inverse(matrix).dot(matrix)
        reporter.assert_within(float(np.max(np.abs(product - np.eye(6))) / (1.0 + np.max(np.abs(matrix)) ** 2)),
                               1e-12, "G M^T G does not invert {} at trial {}".format(specs, index))


@tags("group_action", "isometry")
@display(report_display_order=2)
@trials(100, cap=1000)
def check_isometry_pullback(reporter, sampler, trials):
    """Random group elements pull the chart metric back onto itself within
    1e-6 and carry integrated geodesics onto plane sections.
    """
    for index in range(trials):
        domain = charts.DOMAINS[index % len(charts.DOMAINS)]
        matrix, specs, point = sampler.chart_isometry_pair(domain)
        reporter.assert_within(group_action.pullback_metric_residual(matrix, point), 1e-6,
                               "{} is not an isometry at {} (trial {})".format(specs, point, index))

        velocity = sampler.uniform(-ISOMETRY_VELOCITY_BOUND, ISOMETRY_VELOCITY_BOUND, 5)
        path = geodesics.integrate_affine(geodesics.GeodesicState(point, velocity),
                                          ISOMETRY_PATH_RANGE, h=ISOMETRY_PATH_STEP)
        try:
            image = group_action.transform_path(matrix, path)
        except charts.AtDomainInfinityError:
            logger.debug("The image of the trial {} geodesic crosses domain infinity".format(index))
            continue
        reporter.assert_within(geodesics.plane_section_residual(image), 1e-7,
                               "{} maps a geodesic off its plane at trial {}".format(specs, index))


@tags("group_action", "conformal")
@display(report_display_order=3)
@trials(1000, cap=10000)
def check_dilations_and_translations(reporter, sampler, trials):
    """Dilation(theta) induces x -> e^theta x and Translation(a) induces
    x -> x + a within 1e-9.
    """
    for index in range(trials):
        x = sampler.minkowski(10.0)
        theta = float(sampler.uniform(-1.0, 1.0))
        a = sampler.minkowski(10.0)
        dilated, _ = group_action.act_minkowski(group_action.generator(group_action.dilation(theta)), x)
        translated, _ = group_action.act_minkowski(group_action.generator(group_action.translation(a)), x)
        reporter.assert_within(float(np.max(np.abs(dilated.point - np.exp(theta) * x))),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(x),
                               "Dilation({}) misplaces x at trial {}".format(theta, index))
        reporter.assert_within(float(np.max(np.abs(translated.point - (x + a)))),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(x, a),
                               "Translation misplaces x at trial {}".format(index))


@tags("group_action", "conformal")
@display(report_display_order=4)
@trials(100, cap=10000)
def check_induced_maps_are_conformal(reporter, sampler, trials):
    """The numerical differential of a random induced map satisfies
    J^T eta J = c eta within 1e-5 relative, with c the squared conformal
    scale. Inversion sends x to x/q(x) with scale 1/q(x).
    """
    checked = 0
    for _ in range(100 * trials):
        if checked == trials:
            break
        matrix, specs = sampler.group_element()
        x = sampler.minkowski(1.0)
        projection, scale = group_action.act_minkowski(matrix, x)
        if scale is None or not 1e-2 <= abs(scale) <= 1e2:
            logger.debug("Rejected {}: conformal scale {}".format(specs, scale))
            continue
        try:
            factor, residual = group_action.minkowski_conformality(matrix, x)
        except group_action.AtConformalInfinityError:
            continue
        reporter.assert_within(residual, 1e-5,
                               "The map of {} is not conformal at trial {}".format(specs, checked))
        reporter.assert_within(abs(factor - scale * scale) / (scale * scale), 1e-5,
                               "The conformal factor of {} is not the squared scale at trial {}".format(specs, checked))
        checked += 1
    reporter.assert_fail(checked == trials, "Only {} of {} draws had a finite conformal scale".format(checked, trials))

    inversion = group_action.generator(group_action.inversion())
    for index in range(trials):
        x = sampler.minkowski(1.0)
        q = ambient.minkowski_q(x)
        if abs(q) < 0.1:
            continue
        projection, scale = group_action.act_minkowski(inversion, x)
        reporter.assert_within(float(np.max(np.abs(projection.point - x / q))),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(x / q),
                               "Inversion misplaces x at trial {}".format(index))
        reporter.assert_within(abs(scale - 1.0 / q), ambient.DEFAULT_TOLERANCE * (1.0 + abs(1.0 / q)),
                               "Inversion has the wrong scale at trial {}".format(index))
