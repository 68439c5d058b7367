"""
### Compactified Minkowski space

The two embeddings of Minkowski space into the null cone of R^{4,2}, the
projection back, conformal infinity and the double cover.
"""

# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.compactification as compactification
from conformal_domains.decorators import display, tags, trials

report_display_order = 2


@tags("compactification", "embedding")
@display(report_display_order=1)
@trials(10000, cap=100000)
def check_embeddings_land_on_null_cone(reporter, sampler, trials):
    """tau+(x) and tau-(x) are null, with X5 - X6 = +1 and -1 respectively,
    for x in [-10, 10]^4.
    """
    for index in range(trials):
        x = sampler.minkowski(10.0)
        q = ambient.minkowski_q(x)
        for embedding, section in ((compactification.tau_plus, 1.0), (compactification.tau_minus, -1.0)):
            X = embedding(x)
            reporter.assert_within(abs(ambient.quadratic_form(X)), 1e-9 * (1.0 + q * q),
                                   "{} is off the null cone at trial {}".format(embedding.__name__, index))
            reporter.assert_within(abs(X[4] - X[5] - section), 1e-12,
                                   "{} is off the section X5 - X6 = {} at trial {}".format(
                                       embedding.__name__, section, index))


@tags("compactification", "embedding")
@display(report_display_order=2)
@trials(1000, cap=100000)
def check_projection_inverts_embeddings(reporter, sampler, trials):
    """Every nonzero multiple of tau+(x) projects back onto x."""
    for index in range(trials):
        x = sampler.minkowski(10.0)
        factor = float(np.exp(sampler.uniform(-3.0, 3.0))) * sampler.side()
        projection = compactification.cone_to_minkowski(factor * compactification.tau_plus(x))
        if projection.is_at_infinity:
            reporter.fail("A finite point projected onto conformal infinity at trial {}".format(index))
            continue
        reporter.assert_within(float(np.max(np.abs(projection.point - x))),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(x),
                               "The projection misses x at trial {}".format(index))


@tags("compactification", "embedding")
@display(report_display_order=3)
@trials(1000, cap=100000)
def check_polarization_identity(reporter, sampler, trials):
    """(tau+(x), tau+(y)) = -q(x - y)/2."""
    for index in range(trials):
        x = sampler.minkowski(10.0)
        y = sampler.minkowski(10.0)
        embedded, closed_form = compactification.polarization(x, y)
        reporter.assert_within(abs(embedded - closed_form),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(
                                   compactification.tau_plus(x), compactification.tau_plus(y)),
                               "The polarization identity fails at trial {}".format(index))


@tags("compactification", "infinity")
@display(report_display_order=4)
@trials(1000, cap=100000)
def check_conformal_infinity_and_double_cover(reporter, sampler, trials):
    """Cone points with X5 = X6 sit at conformal infinity, and X and -X give
    the same Minkowski point.
    """
    for index in range(trials):
        spatial = sampler.uniform(-1.0, 1.0, 3)
        null = np.append(spatial, np.linalg.norm(spatial))
        height = sampler.uniform(-2.0, 2.0)
        X = np.append(null, [height, height])
        reporter.assert_fail(compactification.is_conformal_infinity(X),
                             "A cone point with X5 = X6 is finite at trial {}".format(index))
        projection = compactification.cone_to_minkowski(X, relation=ambient.PROJECTIVE)
        reporter.assert_fail(projection.is_at_infinity,
                             "A cone point with X5 = X6 projected to a finite point at trial {}".format(index))
        if projection.is_at_infinity:
            reporter.assert_within(abs(np.linalg.norm(projection.infinity) - 1.0), 1e-12,
                                   "The infinity representative is not unit at trial {}".format(index))

        x = sampler.minkowski(10.0)
        embedded = compactification.tau_plus(x)
        antipodal = compactification.antipode(embedded)
        reporter.assert_fail(ambient.ray_equivalent(antipodal, embedded, ambient.PROJECTIVE) and
                             not ambient.ray_equivalent(antipodal, embedded, ambient.ORIENTED),
                             "The antipode is not on the opposite oriented ray at trial {}".format(index))
        reporter.assert_within(float(np.max(np.abs(compactification.cone_to_minkowski(antipodal).point - x))),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(x),
                               "The antipode projects elsewhere at trial {}".format(index))
