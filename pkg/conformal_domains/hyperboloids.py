"""Points of Sigma- as hyperboloids of Minkowski space.

A chart point (y, lam) of Sigma- has the representative Y with Y5 - Y6 = 1,

    Y = (y, (1 - q(y) - lam^2)/2, -(1 + q(y) + lam^2)/2),

and (tau_plus(x), Y) = -(q(x - y) + lam^2)/2 for every Minkowski x. The points
x incident with Y therefore form the two-sheeted hyperboloid q(x - y) = -lam^2
with apexes y +- (0, 0, 0, lam). Both chart sides give the same, unoriented,
hyperboloid.
"""

# Python Standard Libraries
import collections
import logging
import math
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
import conformal_domains.compactification as compactification

logger = logging.getLogger(__name__)

TIME_AXIS = np.array([0.0, 0.0, 0.0, 1.0])


class WrongDomainError(Exception):
    """Raised when a Sigma+ point is used where Sigma- is required."""
    pass


class IncidenceMismatchError(Exception):
    """Raised when the ambient and Minkowski incidence forms disagree beyond
    tolerance.
    """
    pass


class Hyperboloid(collections.namedtuple('Hyperboloid', ['center', 'radius'])):
    """The hyperboloid {x : q(x - center) = -radius^2}."""
    __slots__ = ()

    def __new__(cls, center, radius):
        radius = float(radius)
        if not np.isfinite(radius) or radius <= 0.0:
            raise charts.InvalidLambdaError("A hyperboloid radius must be positive, got {}".format(radius))
        return super(Hyperboloid, cls).__new__(cls, ambient.as_minkowski(center), radius)

    def __repr__(self):
        return "Hyperboloid(center={}, radius={!r})".format(list(self.center), self.radius)

    def point(self, direction, rapidity, sheet=1):
        """Returns center + radius sheet (sinh(r) u, cosh(r)) with u the unit
        spatial vector along `direction` and sheet = +1 (future) or -1 (past).
        """
        if sheet not in (1, -1):
            raise ValueError("sheet must be +1 or -1, got {}".format(sheet))
        direction = np.asarray(direction, dtype=float)
        norm = np.linalg.norm(direction)
        if direction.shape != (3,) or norm == 0.0:
            raise ValueError("direction must be a nonzero spatial 3-vector, got {}".format(direction))
        unit = direction / norm
        offset = np.append(math.sinh(rapidity) * unit, math.cosh(rapidity))
        return self.center + self.radius * sheet * offset

    def residual(self, x):
        """Returns q(x - center) + radius^2."""
        return ambient.minkowski_q(ambient.as_minkowski(x) - self.center) + self.radius ** 2


def _require_sigma_minus(p):
    if p.domain != charts.SIGMA_MINUS:
        raise WrongDomainError("Hyperboloids correspond to points of {}, got {}".format(charts.SIGMA_MINUS, p.domain))


def normalized_representative(p):
    """Returns the multiple of chart_to_ambient(p) with Y5 - Y6 = 1."""
    _require_sigma_minus(p)
    return charts.chart_to_ambient(p) * p.lam * p.side


def sigma_point_to_hyperboloid(p):
    _require_sigma_minus(p)
    return Hyperboloid(p.x, p.lam)


def hyperboloid_to_sigma_point(hyperboloid, side=1):
    return charts.ChartPoint(charts.SIGMA_MINUS, hyperboloid.center, hyperboloid.radius, side)


def apexes(hyperboloid):
    """Returns the apexes center +- (0, 0, 0, radius), future first."""
    return (hyperboloid.center + hyperboloid.radius * TIME_AXIS,
            hyperboloid.center - hyperboloid.radius * TIME_AXIS)


def incidence(x, p, tol=ambient.DEFAULT_TOLERANCE):
    """Returns True when x lies on the hyperboloid of p.

    The ambient form (tau_plus(x), Y) and the Minkowski form
    -(q(x - p.x) + lam^2)/2 are both computed and compared. The result is the
    ambient form tested against tol times the tolerance scale.

    Raises:
        WrongDomainError: p is a point of Sigma+.
        IncidenceMismatchError: the two forms differ beyond tolerance.
    """
    _require_sigma_minus(p)
    embedded = compactification.tau_plus(x)
    representative = normalized_representative(p)
    ambient_form = ambient.inner(embedded, representative)
    minkowski_form = -(ambient.minkowski_q(embedded[:4] - p.x) + p.lam ** 2) / 2.0

    bound = tol * ambient.tolerance_scale(embedded, representative)
    if abs(ambient_form - minkowski_form) > bound:
        error_output = ("The incidence forms disagree for x = {} and {}: {} != {}."
                        ).format(embedded[:4], p, ambient_form, minkowski_form)
        raise IncidenceMismatchError(error_output)

    incident = abs(ambient_form) <= bound
    if incident != (abs(minkowski_form) <= bound):
        logger.warning("The incidence of {} and {} sits on the tolerance boundary".format(embedded[:4], p))
    return incident


def geodesic_to_family(path):
    """Returns the hyperboloids of the samples of a Sigma- path, in order."""
    if path.domain != charts.SIGMA_MINUS:
        raise WrongDomainError("Hyperboloid families come from paths in {}, got {}".format(charts.SIGMA_MINUS, path.domain))
    return [sigma_point_to_hyperboloid(point) for point in path.points]
