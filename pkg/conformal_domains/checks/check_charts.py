"""
### Half-space charts on Sigma+ and Sigma-

Conversion between ambient vectors of the domains Q = +-1 and the chart
coordinates (x, lambda), the induced metric and domain infinity.

Metric cross-validation samples |x| <= 1 and lambda in [0.5, 2], where the
central difference step 1e-5 resolves the 1/lambda^2 growth of the metric.
"""

# Python Standard Libraries
import math
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
from conformal_domains.decorators import display, tags, trials

report_display_order = 3


def _relative(found, expected):
    found = np.asarray(found, dtype=float)
    expected = np.asarray(expected, dtype=float)
    return float(np.max(np.abs(found - expected)) / (1.0 + np.max(np.abs(expected))))


@tags("charts", "round_trip")
@display(report_display_order=1)
@trials(10000, cap=100000)
def check_chart_round_trip(reporter, sampler, trials):
    """chart_to_ambient and ambient_to_chart invert each other for lambda in
    (1e-3, 1e3), and every image lies on its domain.
    """
    for index in range(trials):
        p = sampler.chart_point(x_bound=10.0, lam_range=(1e-3, 1e3))
        X = charts.chart_to_ambient(p)
        reporter.assert_within(abs(ambient.quadratic_form(X) - charts.DOMAIN_QUADRATIC_FORM[p.domain]),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(X),
                               "The image of a {} point is off its domain at trial {}".format(p.domain, index))
        back = charts.ambient_to_chart(X)
        reporter.assert_fail(back.domain == p.domain and back.side == p.side,
                             "The round trip changed domain or side at trial {}".format(index))
        reporter.assert_within(_relative(back.coordinates, p.coordinates), 1e-9,
                               "The chart round trip drifts at trial {}".format(index))
        reporter.assert_within(_relative(charts.chart_to_ambient(back), X), 1e-9,
                               "The ambient round trip drifts at trial {}".format(index))


@tags("charts", "round_trip")
@display(report_display_order=2)
@trials(1000, cap=100000)
def check_ambient_points_have_charts(reporter, sampler, trials):
    """Normalized ambient vectors off the cone convert to chart points that
    map back onto them.
    """
    for index in range(trials):
        X = sampler.ambient_vector(1.0)
        if ambient.classify(X) == ambient.CONE:
            continue
        Y = ambient.normalize_to_sigma(X)
        if charts.is_domain_infinity(Y, 1e-6):
            reporter.warn("Trial {} drew a point near domain infinity".format(index))
            continue
        p = charts.ambient_to_chart(Y)
        reporter.assert_fail(p.domain == charts.sigma_domain(Y),
                             "The chart domain disagrees with Q at trial {}".format(index))
        reporter.assert_within(_relative(charts.chart_to_ambient(p), Y), 1e-9,
                               "The ambient round trip drifts at trial {}".format(index))


@tags("charts", "metric")
@display(report_display_order=3)
@trials(1000, cap=10000)
def check_metric_cross_validation(reporter, sampler, trials):
    """The metric pulled back through the embedding with h = 1e-5 agrees with
    (1/lambda^2) diag(1, 1, 1, -1, +-1) within 1e-6/lambda^2 on both domains.
    """
    for index in range(trials):
        domain = charts.DOMAINS[index % len(charts.DOMAINS)]
        p = sampler.chart_point(domain, x_bound=1.0, lam_range=(0.5, 2.0), logarithmic=False)
        numerical = charts.metric_numerical(p, 1e-5)
        closed_form = charts.metric_closed_form(p)
        reporter.assert_within(float(np.max(np.abs(numerical - closed_form))), 1e-6 / p.lam ** 2,
                               "The {} metric disagrees at trial {}".format(domain, index))


@tags("charts", "metric")
@display(report_display_order=4)
@trials(1000, cap=100000)
def check_metric_signature(reporter, sampler, trials):
    """The metric has signature (4, 1) on Sigma- and (3, 2) on Sigma+."""
    for index in range(trials):
        p = sampler.chart_point()
        found = charts.metric_signature(charts.metric_closed_form(p))
        expected = charts.expected_signature(p.domain)
        reporter.assert_fail(found == expected,
                             "The {} metric has signature {}, expected {}, at trial {}".format(
                                 p.domain, found, expected, index))


@tags("charts", "infinity")
@display(report_display_order=5)
@trials(1000, cap=100000)
def check_domain_infinity(reporter, sampler, trials):
    """Points of Sigma+- with X5 = X6 have no chart; their reduced point lies
    on the two-sheeted (Sigma-) or one-sheeted (Sigma+) unit hyperboloid.
    """
    for index in range(trials):
        spatial = sampler.uniform(-1.0, 1.0, 3)
        unit = spatial / np.linalg.norm(spatial)
        rapidity = sampler.uniform(-2.0, 2.0)
        height = sampler.uniform(-2.0, 2.0)
        reduced = {
            charts.SIGMA_MINUS: np.append(math.sinh(rapidity) * unit, sampler.side() * math.cosh(rapidity)),
            charts.SIGMA_PLUS: np.append(math.cosh(rapidity) * unit, math.sinh(rapidity)),
        }
        for domain, point in reduced.items():
            X = np.append(point, [height, height])
            reporter.assert_fail(charts.is_domain_infinity(X),
                                 "A {} point with X5 = X6 is finite at trial {}".format(domain, index))
            try:
                charts.ambient_to_chart(X)
                reporter.fail("A {} point at infinity got a chart at trial {}".format(domain, index))
            except charts.AtDomainInfinityError as exception:
                reporter.assert_fail(exception.domain == domain,
                                     "Infinity reported on {} instead of {} at trial {}".format(
                                         exception.domain, domain, index))
                reporter.assert_within(abs(exception.q - charts.DOMAIN_QUADRATIC_FORM[domain]), 1e-9,
                                       "The reduced point is off the unit hyperboloid at trial {}".format(index))


@tags("charts", "metric")
@display(report_display_order=6)
@trials(1000, cap=100000)
def check_minkowski_slice(reporter, sampler, trials):
    """On the lambda = 1 slice the metric restricted to x is eta and the
    ambient image keeps x in its first four components.
    """
    for index in range(trials):
        domain = charts.DOMAINS[index % len(charts.DOMAINS)]
        x = sampler.minkowski(10.0)
        p = charts.minkowski_slice(x, domain)
        g = charts.metric_closed_form(p)
        reporter.assert_within(float(np.max(np.abs(g[:4, :4] - ambient.ETA))), 0.0,
                               "The {} slice metric is not eta at trial {}".format(domain, index))
        X = charts.chart_to_ambient(p)
        reporter.assert_within(_relative(X[:4], x), 1e-15,
                               "The {} slice moves x at trial {}".format(domain, index))
        reporter.assert_within(abs(X[4] - X[5] - 1.0), ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(X),
                               "The {} slice is off X5 - X6 = 1 at trial {}".format(domain, index))
