"""
### Sigma- as the space of hyperboloids

A point (y, lambda) of Sigma- corresponds to the two-sheeted hyperboloid
q(x - y) = -lambda^2, and x lies on it exactly when (tau+(x), Y) = 0 for the
representative Y of the point with Y5 - Y6 = 1.
"""

# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
import conformal_domains.compactification as compactification
import conformal_domains.group_action as group_action
import conformal_domains.hyperboloids as hyperboloids
from conformal_domains.decorators import display, tags, trials

report_display_order = 6


@tags("hyperboloids", "incidence")
@display(report_display_order=1)
@trials(10000, cap=100000)
def check_incidence_identity(reporter, sampler, trials):
    """(tau+(x), Y(p)) = -(q(x - y) + lambda^2)/2 for random x and p."""
    for index in range(trials):
        x = sampler.minkowski(10.0)
        p = sampler.chart_point(charts.SIGMA_MINUS, x_bound=10.0, lam_range=(1e-2, 1e2))
        embedded = compactification.tau_plus(x)
        representative = hyperboloids.normalized_representative(p)
        expected = -(ambient.minkowski_q(x - p.x) + p.lam ** 2) / 2.0
        reporter.assert_within(abs(ambient.inner(embedded, representative) - expected),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(embedded, representative),
                               "The incidence identity fails at trial {}".format(index))
        reporter.assert_within(abs(representative[4] - representative[5] - 1.0), 1e-9,
                               "The representative is off Y5 - Y6 = 1 at trial {}".format(index))


@tags("hyperboloids", "incidence")
@display(report_display_order=2)
@trials(1000, cap=100000)
def check_hyperboloid_points_are_incident(reporter, sampler, trials):
    """Both apexes and random points of the hyperboloid of a random Sigma-
    point pass the incidence test, and the hyperboloid gives back the point.
    """
    for index in range(trials):
        p = sampler.chart_point(charts.SIGMA_MINUS, x_bound=10.0, lam_range=(1e-1, 1e1), side=1)
        hyperboloid = hyperboloids.sigma_point_to_hyperboloid(p)
        future, past = hyperboloids.apexes(hyperboloid)
        reporter.assert_fail(hyperboloids.incidence(future, p) and hyperboloids.incidence(past, p),
                             "An apex is not incident at trial {}".format(index))
        point = hyperboloid.point(sampler.uniform(-1.0, 1.0, 3), float(sampler.uniform(-1.0, 1.0)), sampler.side())
        reporter.assert_fail(hyperboloids.incidence(point, p),
                             "A point of the hyperboloid is not incident at trial {}".format(index))
        back = hyperboloids.hyperboloid_to_sigma_point(hyperboloid)
        reporter.assert_within(float(np.max(np.abs(back.coordinates - p.coordinates))), 0.0,
                               "The hyperboloid does not give back its point at trial {}".format(index))


@tags("hyperboloids", "incidence", "group_action")
@display(report_display_order=3)
@trials(1000, cap=100000)
def check_incidence_equivariance(reporter, sampler, trials):
    """Spatial rotations and translations carry x and p to x' and p' with the
    same incidence form, so incident pairs stay incident.
    """
    for index in range(trials):
        matrix, specs = sampler.euclidean_motion()
        p = sampler.chart_point(charts.SIGMA_MINUS, x_bound=10.0, lam_range=(1e-1, 1e1), side=1)
        on_surface = hyperboloids.sigma_point_to_hyperboloid(p).point(
            sampler.uniform(-1.0, 1.0, 3), float(sampler.uniform(-1.0, 1.0)), sampler.side())
        moved_p = group_action.act_chart(matrix, p)
        reporter.assert_within(abs(moved_p.lam - p.lam), 1e-10 * p.lam,
                               "{} changed the hyperboloid radius at trial {}".format(specs, index))

        for x in (on_surface, sampler.minkowski(10.0)):
            projection, _ = group_action.act_minkowski(matrix, x)
            moved_x = projection.point
            before = ambient.inner(compactification.tau_plus(x), hyperboloids.normalized_representative(p))
            after = ambient.inner(compactification.tau_plus(moved_x), hyperboloids.normalized_representative(moved_p))
            reporter.assert_within(abs(after - before),
                                   ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(
                                       compactification.tau_plus(moved_x), compactification.tau_plus(x)),
                                   "{} changed the incidence form at trial {}".format(specs, index))
        reporter.assert_fail(hyperboloids.incidence(group_action.act_minkowski(matrix, on_surface)[0].point, moved_p),
                             "{} broke the incidence of a surface point at trial {}".format(specs, index))
