"""
### Ambient space R^{4,2}

The scalar product of R^{4,2}, the classification of vectors into the null
cone and the open domains, and ray equivalence.
"""

# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
from conformal_domains.decorators import display, tags, trials

report_display_order = 1


@tags("ambient", "algebra")
@display(report_display_order=1)
@trials(1000, cap=10000)
def check_scalar_product_polarizes_quadratic_form(reporter, sampler, trials):
    """(X, Y) = (Q(X + Y) - Q(X - Y)) / 4 and (X, Y) = (Y, X)."""
    for index in range(trials):
        X = sampler.ambient_vector()
        Y = sampler.ambient_vector()
        bound = 1e-12 * ambient.tolerance_scale(X, Y)
        polarized = (ambient.quadratic_form(X + Y) - ambient.quadratic_form(X - Y)) / 4.0
        reporter.assert_within(abs(ambient.inner(X, Y) - polarized), bound,
                               "Polarization fails at trial {}".format(index))
        reporter.assert_within(abs(ambient.inner(X, Y) - ambient.inner(Y, X)), bound,
                               "The scalar product is not symmetric at trial {}".format(index))


@tags("ambient", "algebra")
@display(report_display_order=2)
@trials(1000, cap=10000)
def check_normalization_lands_on_sigma(reporter, sampler, trials):
    """Vectors off the cone scale onto Q = +1 or Q = -1 along their own
    oriented ray, and keep their region.
    """
    for index in range(trials):
        X = sampler.ambient_vector()
        region = ambient.classify(X)
        if region == ambient.CONE:
            reporter.warn("Trial {} drew a null vector".format(index))
            continue
        Y = ambient.normalize_to_sigma(X)
        expected = 1.0 if region == ambient.D_PLUS else -1.0
        reporter.assert_within(abs(ambient.quadratic_form(Y) - expected),
                               ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(Y),
                               "Q of the normalized vector is not {} at trial {}".format(expected, index))
        reporter.assert_fail(ambient.classify(Y) == region,
                             "Normalization changed the region at trial {}".format(index))
        reporter.assert_fail(ambient.ray_equivalent(Y, X, ambient.ORIENTED),
                             "Normalization left the oriented ray at trial {}".format(index))


@tags("ambient", "algebra")
@display(report_display_order=3)
@trials(1000, cap=10000)
def check_ray_equivalence_relations(reporter, sampler, trials):
    """Positive multiples are equivalent under both relations, negative
    multiples only projectively.
    """
    for index in range(trials):
        X = sampler.ambient_vector()
        factor = float(np.exp(sampler.uniform(-3.0, 3.0)))
        reporter.assert_fail(ambient.ray_equivalent(factor * X, X, ambient.ORIENTED),
                             "A positive multiple is not oriented-equivalent at trial {}".format(index))
        reporter.assert_fail(ambient.ray_equivalent(-factor * X, X, ambient.PROJECTIVE),
                             "A negative multiple is not projectively equivalent at trial {}".format(index))
        reporter.assert_fail(not ambient.ray_equivalent(-factor * X, X, ambient.ORIENTED),
                             "A negative multiple is oriented-equivalent at trial {}".format(index))
