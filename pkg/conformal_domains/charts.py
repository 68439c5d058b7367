"""Half-space charts on the domains Sigma- (Q = -1) and Sigma+ (Q = +1).

A chart point (x, lam, side) with lam > 0 embeds as

    X^mu = x^mu / lam
    X5   = (1 - q(x) - k lam^2) / (2 lam)
    X6   = -(1 + q(x) + k lam^2) / (2 lam)

with k = +1 on Sigma- and k = -1 on Sigma+, so that X5 - X6 = 1/lam. Points
with X5 - X6 < 0 are reached with side = -1, which negates the whole vector.
The induced metric is (1/lam^2) diag(1, 1, 1, -1, k) in the coordinate order
(x1, x2, x3, x4, lam).
"""

# Python Standard Libraries
import collections
import logging
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient

logger = logging.getLogger(__name__)

SIGMA_MINUS = "sigma-minus"
SIGMA_PLUS = "sigma-plus"
DOMAINS = [SIGMA_MINUS, SIGMA_PLUS]

# Normalized value of Q(X) on each domain
DOMAIN_QUADRATIC_FORM = {
    SIGMA_MINUS: -1.0,
    SIGMA_PLUS: 1.0,
}

# (positive, negative) eigenvalue counts of the induced metric
EXPECTED_SIGNATURE = {
    SIGMA_MINUS: (4, 1),
    SIGMA_PLUS: (3, 2),
}

DEFAULT_DIFFERENCE_STEP = 1e-5
CHART_DIMENSION = 5


class InvalidLambdaError(Exception):
    """Raised when a chart coordinate lambda is not strictly positive."""
    pass


class NotOnSigmaError(Exception):
    """Raised when an ambient vector is on neither Sigma+ nor Sigma-."""
    pass


class AtDomainInfinityError(Exception):
    """Raised when an ambient point of Sigma+- has X5 = X6 and therefore no
    chart coordinates.

    Attributes:
        domain (String): the domain of the point.
        point (numpy array): the reduced Minkowski point (X1, X2, X3, X4).
        q (Float): q of the reduced point, -1 on Sigma- and +1 on Sigma+.
    """

    def __init__(self, message, domain=None, point=None, q=None):
        super(AtDomainInfinityError, self).__init__(message)
        self.domain = domain
        self.point = point
        self.q = q


class StepTooLargeError(Exception):
    """Raised when a finite difference step would leave the half-space."""
    pass


def domain_sign(domain):
    """Returns k: +1 for Sigma-, -1 for Sigma+.

    k is the sign in front of lam^2 in the embedding and the fifth entry of
    the flat metric that is conformally rescaled by 1/lam^2.
    """
    if domain == SIGMA_MINUS:
        return 1.0
    elif domain == SIGMA_PLUS:
        return -1.0
    raise ValueError("Unknown domain: {}".format(domain))


class ChartPoint(collections.namedtuple('ChartPoint', ['domain', 'x', 'lam', 'side'])):
    """A point of Sigma+- in half-space coordinates."""
    __slots__ = ()

    def __new__(cls, domain, x, lam, side=1):
        domain_sign(domain)
        lam = float(lam)
        if not np.isfinite(lam) or lam <= 0.0:
            raise InvalidLambdaError("lambda must be a positive real, got {}".format(lam))
        if side not in (1, -1):
            raise ValueError("side must be +1 or -1, got {}".format(side))
        x = ambient.as_minkowski(x)
        return super(ChartPoint, cls).__new__(cls, domain, x, lam, int(side))

    @property
    def coordinates(self):
        """Returns the chart coordinates (x1, x2, x3, x4, lam)."""
        return np.append(self.x, self.lam)

    def __repr__(self):
        return "ChartPoint(domain={}, x={}, lam={!r}, side={})".format(
            self.domain, list(self.x), self.lam, self.side)


def from_coordinates(domain, coordinates, side=1):
    """Builds a ChartPoint from the 5-vector (x1, x2, x3, x4, lam)."""
    coordinates = np.asarray(coordinates, dtype=float)
    return ChartPoint(domain, coordinates[:4], coordinates[4], side)


def _embed(domain, x, lam, side):
    k = domain_sign(domain)
    q = float(np.sum(ambient.ETA_SIGNS * x * x))
    head = x / lam
    fifth = (1.0 - q - k * lam * lam) / (2.0 * lam)
    sixth = -(1.0 + q + k * lam * lam) / (2.0 * lam)
    return side * np.concatenate([head, [fifth, sixth]])


def chart_to_ambient(p):
    """Returns the ambient vector of a chart point."""
    if p.lam <= 0.0:
        raise InvalidLambdaError("lambda must be positive, got {}".format(p.lam))
    return _embed(p.domain, p.x, p.lam, p.side)


def sigma_domain(X, tol=ambient.DEFAULT_TOLERANCE):
    """Returns the domain picked by the sign of Q(X), after checking that
    Q(X) is that domain's +-1 within tolerance.

    Raises:
        NotOnSigmaError: Q(X) is not +-1 within tolerance.
    """
    X = ambient.as_ambient(X)
    value = ambient.quadratic_form(X)
    domain = SIGMA_PLUS if value > 0.0 else SIGMA_MINUS
    if value != 0.0 and abs(value - DOMAIN_QUADRATIC_FORM[domain]) <= tol * ambient.tolerance_scale(X):
        return domain
    raise NotOnSigmaError("Q(X) = {} is not +1 or -1 within tolerance: {}".format(value, X))


def _at_infinity(X, tol):
    return abs(X[4] - X[5]) <= tol * ambient.tolerance_scale(X)


def infinity_point(X, tol=ambient.DEFAULT_TOLERANCE):
    """Returns (domain, reduced point, q) for a point of Sigma+- at infinity.

    At X5 = X6 the form Q(X) reduces to q(X1..X4), so the reduced point lies
    on the two-sheeted (Sigma-) or one-sheeted (Sigma+) unit hyperboloid. Near
    infinity q of the reduced point differs from +-1 by
    (X5 - X6)(X5 + X6); it is reported as computed.
    """
    X = ambient.as_ambient(X)
    domain = sigma_domain(X, tol)
    reduced = X[:4].copy()
    return domain, reduced, ambient.minkowski_q(reduced)


def is_domain_infinity(X, tol=ambient.DEFAULT_TOLERANCE):
    """Returns True when X, a point of Sigma+-, has X5 = X6 within tolerance."""
    X = ambient.as_ambient(X)
    sigma_domain(X, tol)
    return _at_infinity(X, tol)


def ambient_to_chart(X, tol=ambient.DEFAULT_TOLERANCE):
    """Returns the chart point of an ambient vector of Sigma+-.

    Raises:
        NotOnSigmaError: Q(X) is not +-1 within tolerance.
        AtDomainInfinityError: X5 - X6 vanishes within tolerance.
    """
    X = ambient.as_ambient(X)
    domain = sigma_domain(X, tol)
    difference = X[4] - X[5]
    if _at_infinity(X, tol):
        _, reduced, q = infinity_point(X, tol)
        error_output = ("{} lies at the infinity of {}: X5 - X6 = {}, reduced point {} with q = {}."
                        ).format(X, domain, difference, reduced, q)
        raise AtDomainInfinityError(error_output, domain=domain, point=reduced, q=q)
    side = 1 if difference > 0.0 else -1
    return ChartPoint(domain, X[:4] / difference, 1.0 / abs(difference), side)


def minkowski_slice(x, domain=SIGMA_MINUS, side=1):
    """Returns the chart point (x, 1) of the lam = 1 slice.

    The slice carries Minkowski space isometrically: there the induced metric
    restricted to (x1, .., x4) is eta, and the ambient image has
    X^mu = side x^mu and X5 - X6 = side.
    """
    return ChartPoint(domain, x, 1.0, side)


def metric_closed_form(p):
    """Returns (1/lam^2) diag(1, 1, 1, -1, k) at the chart point p."""
    if p.lam <= 0.0:
        raise InvalidLambdaError("lambda must be positive, got {}".format(p.lam))
    flat = np.append(ambient.ETA_SIGNS, domain_sign(p.domain))
    return np.diag(flat) / (p.lam * p.lam)


def difference_steps(coordinates, h=None):
    """Returns the per-direction central difference steps.

    Without an explicit h the step is DEFAULT_DIFFERENCE_STEP scaled by
    max(1, |coordinate|).
    """
    coordinates = np.asarray(coordinates, dtype=float)
    if h is None:
        return DEFAULT_DIFFERENCE_STEP * np.maximum(1.0, np.abs(coordinates))
    h = float(h)
    if not np.isfinite(h) or h <= 0.0:
        raise StepTooLargeError("The difference step must be a positive real, got {}".format(h))
    return np.full(coordinates.shape, h)


def ambient_jacobian(p, h=None):
    """Returns the 6x5 matrix dX^A/dx^alpha of chart_to_ambient at p by
    central differences.
    """
    coordinates = p.coordinates
    steps = difference_steps(coordinates, h)
    if steps[4] >= p.lam:
        error_output = ("The lambda step {} must be smaller than lambda = {}."
                        ).format(steps[4], p.lam)
        raise StepTooLargeError(error_output)

    jacobian = np.zeros((6, CHART_DIMENSION))
    for alpha in range(CHART_DIMENSION):
        offset = np.zeros(CHART_DIMENSION)
        offset[alpha] = steps[alpha]
        forward = coordinates + offset
        backward = coordinates - offset
        jacobian[:, alpha] = (_embed(p.domain, forward[:4], forward[4], p.side) -
                              _embed(p.domain, backward[:4], backward[4], p.side)) / (2.0 * steps[alpha])
    return jacobian


def metric_numerical(p, h=None):
    """Returns the induced metric g = J^T G J from the numerical Jacobian of
    chart_to_ambient, with G = diag(1, 1, 1, -1, 1, -1).
    """
    if p.lam <= 0.0:
        raise InvalidLambdaError("lambda must be positive, got {}".format(p.lam))
    jacobian = ambient_jacobian(p, h)
    return np.einsum('ia,i,ib->ab', jacobian, ambient.METRIC_SIGNS, jacobian)


def metric_signature(g):
    """Returns the (positive, negative) eigenvalue counts of a symmetric
    matrix.
    """
    eigenvalues = np.linalg.eigvalsh(np.asarray(g, dtype=float))
    return int(np.sum(eigenvalues > 0.0)), int(np.sum(eigenvalues < 0.0))


def expected_signature(domain):
    """Returns the (positive, negative) signature of the metric on domain."""
    domain_sign(domain)
    return EXPECTED_SIGNATURE[domain]


def chart_coordinates(p):
    """Returns the 5-vector (x1, x2, x3, x4, lam) of a chart point."""
    return p.coordinates
