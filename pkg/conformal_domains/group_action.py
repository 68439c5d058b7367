"""The group O(4,2) acting on R^{4,2}, on the charts of Sigma+- and, through
the null cone, on compactified Minkowski space.

Matrices are 6x6 numpy arrays acting on column vectors. Generators are given
as explicit matrices, not through a Lie algebra:

* rotation(i, j, theta): a circular rotation when the axes i and j have the
  same sign in G, a hyperbolic boost otherwise (1-based axes)
* dilation(theta): the boost in the (5, 6) plane, inducing x -> e^theta x
* translation(a): the unipotent matrix inducing x -> x + a
* inversion(): negates X5, inducing x -> x / q(x)
* special_conformal(b): inversion * translation(b) * inversion
"""

# Python Standard Libraries
import collections
import functools
import logging
import math
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
import conformal_domains.compactification as compactification
import conformal_domains.geodesics as geodesics

logger = logging.getLogger(__name__)

ROTATION = "rotation"
DILATION = "dilation"
TRANSLATION = "translation"
SPECIAL_CONFORMAL = "special-conformal"
INVERSION = "inversion"
KINDS = [ROTATION, DILATION, TRANSLATION, SPECIAL_CONFORMAL, INVERSION]

DEFAULT_PULLBACK_STEP = 1e-3
DEFAULT_CONFORMALITY_STEP = 1e-5


class InvalidSpecError(Exception):
    """Raised for generator specifications that name no group element."""
    pass


class AtConformalInfinityError(Exception):
    """Raised when an induced Minkowski map is differentiated at a point sent
    to conformal infinity.
    """
    pass


class GeneratorSpec(collections.namedtuple('GeneratorSpec', ['kind', 'plane', 'parameter', 'vector'])):
    """A generator of O(4,2).

    Attributes:
        kind (String): one of KINDS.
        plane (tuple): the 1-based axes (i, j), i < j, of a ROTATION.
        parameter (Float): the angle or rapidity of a ROTATION or DILATION.
        vector (numpy array): the Minkowski vector of a TRANSLATION or
            SPECIAL_CONFORMAL.
    """
    __slots__ = ()

    def __repr__(self):
        if self.kind == ROTATION:
            return "rotation({}, {}, {!r})".format(self.plane[0], self.plane[1], self.parameter)
        if self.kind == DILATION:
            return "dilation({!r})".format(self.parameter)
        if self.kind in (TRANSLATION, SPECIAL_CONFORMAL):
            return "{}({})".format(self.kind.replace("-", "_"), list(self.vector))
        return "{}()".format(self.kind)


def rotation(i, j, theta):
    return GeneratorSpec(ROTATION, (i, j), theta, None)


def dilation(theta):
    return GeneratorSpec(DILATION, None, theta, None)


def translation(a):
    return GeneratorSpec(TRANSLATION, None, None, np.asarray(a, dtype=float))


def special_conformal(b):
    return GeneratorSpec(SPECIAL_CONFORMAL, None, None, np.asarray(b, dtype=float))


def inversion():
    return GeneratorSpec(INVERSION, None, None, None)


def _require_matrix(M):
    M = np.asarray(M, dtype=float)
    if M.shape != (6, 6):
        raise InvalidSpecError("A group element is a 6x6 matrix, got shape {}".format(M.shape))
    return M


def is_conformal_matrix(M, tol=ambient.DEFAULT_TOLERANCE):
    """Returns True when M^T G M = G within tol entrywise."""
    M = np.asarray(M, dtype=float)
    if M.shape != (6, 6) or not np.all(np.isfinite(M)):
        return False
    return bool(np.max(np.abs(M.T.dot(ambient.METRIC).dot(M) - ambient.METRIC)) <= tol)


def conformal_residual(M):
    """Returns max |M^T G M - G| / (1 + max |M|^2), the closure residual
    relative to the size of the entries.
    """
    M = _require_matrix(M)
    deviation = np.max(np.abs(M.T.dot(ambient.METRIC).dot(M) - ambient.METRIC))
    return float(deviation / (1.0 + np.max(np.abs(M)) ** 2))


def _rotation_matrix(plane, theta):
    try:
        i, j = (int(axis) for axis in plane)
    except (TypeError, ValueError):
        raise InvalidSpecError("A rotation plane is a pair of axes, got {}".format(plane))
    if not 1 <= i < j <= 6:
        raise InvalidSpecError("Rotation axes must satisfy 1 <= i < j <= 6, got ({}, {})".format(i, j))
    i, j = i - 1, j - 1
    matrix = np.eye(6)
    if ambient.METRIC_SIGNS[i] == ambient.METRIC_SIGNS[j]:
        matrix[i, i] = math.cos(theta)
        matrix[i, j] = -math.sin(theta)
        matrix[j, i] = math.sin(theta)
        matrix[j, j] = math.cos(theta)
    else:
        matrix[i, i] = math.cosh(theta)
        matrix[i, j] = math.sinh(theta)
        matrix[j, i] = math.sinh(theta)
        matrix[j, j] = math.cosh(theta)
    return matrix


def _translation_matrix(a):
    q = float(np.sum(ambient.ETA_SIGNS * a * a))
    lowered = ambient.ETA_SIGNS * a
    matrix = np.eye(6)
    matrix[:4, 4] = a
    matrix[:4, 5] = -a
    matrix[4, :4] = -lowered
    matrix[5, :4] = -lowered
    matrix[4, 4] = 1.0 - q / 2.0
    matrix[4, 5] = q / 2.0
    matrix[5, 4] = -q / 2.0
    matrix[5, 5] = 1.0 + q / 2.0
    return matrix


def _inversion_matrix():
    return np.diag([1.0, 1.0, 1.0, 1.0, -1.0, 1.0])


def generator(spec):
    """Returns the 6x6 matrix of a GeneratorSpec.

    Raises:
        InvalidSpecError: unknown kind, bad rotation plane, or non-finite or
            missing parameters.
    """
    if spec.kind not in KINDS:
        raise InvalidSpecError("Unknown generator kind: {}".format(spec.kind))
    if spec.kind in (ROTATION, DILATION):
        if spec.parameter is None or not np.isfinite(spec.parameter):
            raise InvalidSpecError("{} needs a finite parameter, got {}".format(spec.kind, spec.parameter))
        if spec.kind == DILATION:
            return _rotation_matrix((5, 6), float(spec.parameter))
        return _rotation_matrix(spec.plane, float(spec.parameter))
    if spec.kind == INVERSION:
        return _inversion_matrix()

    try:
        vector = ambient.as_minkowski(spec.vector)
    except (TypeError, ValueError) as exception:
        raise InvalidSpecError("{} needs a finite Minkowski vector: {}".format(spec.kind, exception))
    if spec.kind == TRANSLATION:
        return _translation_matrix(vector)
    flip = _inversion_matrix()
    return flip.dot(_translation_matrix(vector)).dot(flip)


def compose(*specs):
    """Returns generator(specs[0]) @ generator(specs[1]) @ ..., so the last
    spec acts first.
    """
    return functools.reduce(np.dot, [generator(spec) for spec in specs], np.eye(6))


def inverse(M):
    """Returns G M^T G, the inverse of an element of O(4,2)."""
    M = _require_matrix(M)
    return ambient.METRIC.dot(M.T).dot(ambient.METRIC)


def act_ambient(M, X):
    return _require_matrix(M).dot(ambient.as_ambient(X))


def act_chart(M, p, tol=ambient.DEFAULT_TOLERANCE):
    """Returns the chart point of M applied to the ambient image of p.

    Raises:
        AtDomainInfinityError: the image has X5 = X6.
    """
    return charts.ambient_to_chart(act_ambient(M, charts.chart_to_ambient(p)), tol)


def pullback_metric_residual(M, p, h=DEFAULT_PULLBACK_STEP):
    """Returns max |J^T g(F(p)) J - g(p)| for F = act_chart(M, .) with the
    Jacobian J from a five point central stencil of step h.

    Raises:
        StepTooLargeError: lambda is not above 2h.
        AtDomainInfinityError: a stencil point leaves the chart.
    """
    h = float(h)
    if not np.isfinite(h) or h <= 0.0 or p.lam <= 2.0 * h:
        raise charts.StepTooLargeError("The stencil step h = {} needs lambda = {} > 2h".format(h, p.lam))
    image = act_chart(M, p)
    coordinates = p.coordinates

    def mapped(offset):
        moved = charts.from_coordinates(p.domain, coordinates + offset, p.side)
        result = act_chart(M, moved)
        if result.side != image.side:
            error_output = "The stencil around {} crosses the infinity of {}".format(p, p.domain)
            raise charts.AtDomainInfinityError(error_output, domain=p.domain)
        return result.coordinates

    jacobian = np.zeros((5, 5))
    for alpha in range(5):
        offset = np.zeros(5)
        offset[alpha] = h
        jacobian[:, alpha] = (-mapped(2.0 * offset) + 8.0 * mapped(offset) -
                              8.0 * mapped(-offset) + mapped(-2.0 * offset)) / (12.0 * h)
    pulled_back = jacobian.T.dot(charts.metric_closed_form(image)).dot(jacobian)
    return float(np.max(np.abs(pulled_back - charts.metric_closed_form(p))))


def act_minkowski(M, x, tol=ambient.DEFAULT_TOLERANCE):
    """Returns the induced conformal map at x.

    Returns:
        tuple: (ConeProjection, scale). scale is 1/(X5 - X6) of the image of
            tau_plus(x), and None when the image is at conformal infinity.
    """
    X = act_ambient(M, compactification.tau_plus(x))
    projection = compactification.cone_to_minkowski(X, tol)
    if projection.is_at_infinity:
        return projection, None
    return projection, 1.0 / (X[4] - X[5])


def minkowski_conformality(M, x, h=DEFAULT_CONFORMALITY_STEP):
    """Returns (c, residual) with J^T eta J = c eta for the central difference
    differential J of the induced map at x.

    residual is max |J^T eta J - c eta| / |c|, with c the trace estimate
    tr(eta J^T eta J) / 4.

    Raises:
        AtConformalInfinityError: x or a stencil point maps to infinity.
    """
    x = ambient.as_minkowski(x)

    def mapped(point):
        projection, _ = act_minkowski(M, point)
        if projection.is_at_infinity:
            raise AtConformalInfinityError("{} is sent to conformal infinity".format(point))
        return projection.point

    mapped(x)
    jacobian = np.zeros((4, 4))
    for mu in range(4):
        offset = np.zeros(4)
        offset[mu] = h
        jacobian[:, mu] = (mapped(x + offset) - mapped(x - offset)) / (2.0 * h)
    pulled_back = jacobian.T.dot(ambient.ETA).dot(jacobian)
    factor = float(np.trace(ambient.ETA.dot(pulled_back)) / 4.0)
    residual = float(np.max(np.abs(pulled_back - factor * ambient.ETA)) / abs(factor))
    return factor, residual


def transform_path(M, path):
    """Applies act_chart to every sample of a path. Velocities are dropped.

    Raises:
        AtDomainInfinityError: a sample is sent to domain infinity or the
            image changes chart side.
    """
    images = [act_chart(M, point) for point in path.points]
    sides = set(image.side for image in images)
    if len(sides) > 1:
        raise charts.AtDomainInfinityError("The image path crosses the infinity of {}".format(path.domain),
                                           domain=path.domain)
    return geodesics.GeodesicPath(path.parameters, np.array([image.coordinates for image in images]),
                                  None, path.parameterization, path.termination,
                                  images[0].domain, images[0].side)
