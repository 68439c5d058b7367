"""
### Geodesics of Sigma+ and Sigma-

Christoffel symbols, the affine and lambda-parameterized geodesic equations,
the closed-form families and the plane-section property: every geodesic is
the intersection of its domain with a 2-plane through the origin of R^{4,2}.
"""

# Python Standard Libraries
import logging
import math
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
import conformal_domains.geodesics as geodesics
from conformal_domains.decorators import display, tags, trials

logger = logging.getLogger(__name__)

report_display_order = 4

# Closed forms launched by the integrators with the lambda range covered
REPRODUCED_FAMILIES = [
    (geodesics.NULL_PARABOLA, 1.0, (1.0, 2.0)),
    (geodesics.TIMELIKE_HYPERBOLA, 1.0, (1.0, 2.0)),
    (geodesics.SPACELIKE_SEMICIRCLE, math.sqrt(2.0), (1.0, 1.4)),
]
AFFINE_RANGE = 10.0
RANDOM_AFFINE_RANGE = 1.0
RANDOM_VELOCITY_BOUND = 0.25


def _random_affine_state(sampler, domain=None):
    point = sampler.chart_point(domain, x_bound=1.0, lam_range=(0.5, 2.0), logarithmic=False, side=1)
    velocity = sampler.uniform(-RANDOM_VELOCITY_BOUND, RANDOM_VELOCITY_BOUND, 5)
    return geodesics.GeodesicState(point, velocity)


@tags("geodesics", "christoffel")
@display(report_display_order=1)
@trials(1000, cap=10000)
def check_christoffel_cross_validation(reporter, sampler, trials):
    """Christoffel symbols differentiated numerically from the metric agree
    with the closed form within 1e-4/lambda on both domains.
    """
    for index in range(trials):
        domain = charts.DOMAINS[index % len(charts.DOMAINS)]
        p = sampler.chart_point(domain, x_bound=10.0, lam_range=(1e-2, 1e2))
        numerical = geodesics.christoffel_numerical(p, 1e-5)
        closed_form = geodesics.christoffel_closed_form(p)
        reporter.assert_within(float(np.max(np.abs(numerical - closed_form))), 1e-4 / p.lam,
                               "The {} Christoffel symbols disagree at trial {}".format(domain, index))


@tags("geodesics", "integration")
@display(report_display_order=2)
def check_closed_form_reproduction(reporter):
    """integrate_lambda launched on the null parabola (a = 1), the hyperbola
    (a = 1) and the semicircle (a = sqrt 2) keeps the family invariant within
    1e-6 with h = 1e-3. The same data under integrate_affine conserves the
    metric speed within 1e-8 over s in [0, 10].
    """
    for kind, a, (lam0, lam1) in REPRODUCED_FAMILIES:
        geodesic = geodesics.closed_form_geodesic(kind, a=a)
        start = geodesic.coordinates(lam0)
        path = geodesics.integrate_lambda(start[:4], geodesic.derivative(lam0), lam0, lam1, h=1e-3)
        reporter.assert_fail(path.termination == geodesics.COMPLETED,
                             "Lambda integration of the {} ended with {}".format(kind, path.termination))
        worst = max(geodesic.invariant_residual(row) for row in path.coordinates)
        reporter.assert_within(worst, 1e-6, "The integrated {} leaves its invariant".format(kind))
        reporter.assert_within(geodesics.direction_drift(path), 1e-10,
                               "The direction of x' drifts along the {}".format(kind))

        initial = geodesics.initial_state_from_closed_form(geodesic, lam0, -0.5 * lam0)
        affine_path = geodesics.integrate_affine(initial, AFFINE_RANGE, h=1e-3)
        reporter.assert_fail(affine_path.termination == geodesics.COMPLETED,
                             "Affine integration of the {} ended with {}".format(kind, affine_path.termination))
        reporter.assert_within(geodesics.speed_drift(affine_path), 1e-8,
                               "The metric speed drifts along the affine {}".format(kind))
        reporter.assert_within(geodesics.plane_section_residual(path), 1e-7,
                               "The lambda-integrated {} leaves its plane".format(kind))
        reporter.assert_within(geodesics.plane_section_residual(affine_path), 1e-7,
                               "The affine {} leaves its plane".format(kind))


@tags("geodesics", "closed_form")
@display(report_display_order=3)
def check_reduced_equation_and_specialized_displays(reporter):
    """The hyperbola and semicircle solve x'' = x'(1 + x'^2)/lambda within
    1e-10 at 100 points, and miss the specialized equations without the x'
    factor by more than 1e-2.
    """
    cases = [
        (geodesics.closed_form_geodesic(geodesics.TIMELIKE_HYPERBOLA, a=1.0), np.linspace(0.05, 5.0, 100)),
        (geodesics.closed_form_geodesic(geodesics.SPACELIKE_SEMICIRCLE, a=math.sqrt(2.0)),
         np.linspace(0.05, 0.95 * math.sqrt(2.0), 100)),
    ]
    for geodesic, lams in cases:
        reporter.assert_within(geodesics.reduced_equation_residual(geodesic, lams), 1e-10,
                               "The {} does not solve the reduced equation".format(geodesic.kind))
        factorless = geodesics.factorless_equation_residual(geodesic, lams)
        reporter.assert_fail(factorless > 1e-2,
                             "The {} solves the factor-dropped equation (residual {:.3e})".format(
                                 geodesic.kind, factorless))


@tags("geodesics", "plane_section")
@display(report_display_order=4)
def check_closed_forms_are_plane_sections(reporter):
    """Exact samples of every closed-form family lie in a 2-plane through the
    origin within 1e-10.
    """
    samples = [
        (geodesics.closed_form_geodesic(geodesics.NULL_PARABOLA, a=1.0), np.linspace(0.1, 3.0, 50)),
        (geodesics.closed_form_geodesic(geodesics.TIMELIKE_HYPERBOLA, a=1.0), np.linspace(0.1, 3.0, 50)),
        (geodesics.closed_form_geodesic(geodesics.SPACELIKE_SEMICIRCLE, a=math.sqrt(2.0)),
         np.linspace(0.1, 1.4, 50)),
        (geodesics.closed_form_geodesic(geodesics.CONSTANT_LAMBDA_NULL, lam=1.0), np.linspace(-3.0, 3.0, 50)),
    ]
    for geodesic, parameters in samples:
        reporter.assert_within(geodesics.plane_section_residual(geodesic.sample(parameters)), 1e-10,
                               "The {} samples leave their plane".format(geodesic.kind))


@tags("geodesics", "plane_section", "integration")
@display(report_display_order=5)
@trials(100, cap=1000)
def check_random_geodesics_are_plane_sections(reporter, sampler, trials):
    """Affine geodesics from random initial data on either domain lie in a
    2-plane through the origin within 1e-7, and agree with the
    lambda-parameterized equation by the chain rule.
    """
    for index in range(trials):
        initial = _random_affine_state(sampler, sampler.domain())
        path = geodesics.integrate_affine(initial, RANDOM_AFFINE_RANGE, h=1e-3)
        if len(path) < 3:
            reporter.warn("Trial {} stopped after {} samples ({})".format(index, len(path), path.termination))
            continue
        reporter.assert_within(geodesics.plane_section_residual(path), 1e-7,
                               "The random {} geodesic leaves its plane at trial {}".format(
                                   initial.point.domain, index))
        if abs(initial.velocity[4]) > 1e-3:
            reporter.assert_within(geodesics.reparameterization_residual(path), 1e-10,
                                   "The chain rule fails at trial {}".format(index))


@tags("geodesics", "integration")
@display(report_display_order=6)
@trials(10, cap=100)
def check_constant_lambda_null_geodesics(reporter, sampler, trials):
    """Null initial velocity with dlambda/ds = 0 keeps lambda within 1e-10 of
    its initial value over s in [0, 10].
    """
    for index in range(trials):
        point = sampler.chart_point(charts.SIGMA_MINUS, x_bound=1.0, lam_range=(0.5, 2.0), logarithmic=False, side=1)
        spatial = sampler.uniform(-1.0, 1.0, 3)
        null = np.append(spatial, np.linalg.norm(spatial))
        path = geodesics.integrate_affine(geodesics.GeodesicState(point, np.append(null, 0.0)), AFFINE_RANGE, h=1e-3)
        reporter.assert_fail(path.termination == geodesics.COMPLETED,
                             "Trial {} ended with {}".format(index, path.termination))
        reporter.assert_within(float(np.max(np.abs(path.coordinates[:, 4] - point.lam))), 1e-10,
                               "lambda drifts along a null line at trial {}".format(index))
        reporter.assert_fail(geodesics.classify_direction(null) == geodesics.NULL,
                             "The launch direction is not null at trial {}".format(index))


@tags("geodesics", "closed_form")
@display(report_display_order=7)
@trials(100, cap=10000)
def check_direction_classes(reporter, sampler, trials):
    """classify_direction follows the sign of eta(x', x') and metric_speed
    matches the metric.
    """
    for index in range(trials):
        velocity = sampler.minkowski(1.0)
        square = ambient.minkowski_q(velocity)
        expected = geodesics.TIMELIKE if square < 0.0 else geodesics.SPACELIKE
        if abs(square) <= ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(velocity):
            expected = geodesics.NULL
        reporter.assert_fail(geodesics.classify_direction(velocity) == expected,
                             "Trial {} misclassifies a {} direction".format(index, expected))

        state = _random_affine_state(sampler)
        speed = float(state.velocity.dot(charts.metric_closed_form(state.point)).dot(state.velocity))
        reporter.assert_within(abs(geodesics.metric_speed(state) - speed), 1e-12 * (1.0 + abs(speed)),
                               "metric_speed disagrees with the metric at trial {}".format(index))
