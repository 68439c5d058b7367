"""Geodesics of the half-space charts of Sigma+-.

The chart metric is (1/lam^2) diag(eta, k) with k = domain_sign(domain). Its
only non-vanishing Christoffel symbols are

    Gamma^mu_{5 sigma} = -delta^mu_sigma / lam
    Gamma^5_{nu sigma} = k eta_{nu sigma} / lam
    Gamma^5_{55}       = -1 / lam

Geodesics are integrated either with an affine parameter s (state: five
coordinates and five velocities) or with lam itself as the parameter (state:
x and x' = dx/dlam), in which case the equation reduces to

    x'' = x' (1 + k eta(x', x')) / lam

and the direction of x' never changes. Closed-form solutions on Sigma- are
available through `closed_form_geodesic` and serve as oracles.
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

logger = logging.getLogger(__name__)

DEFAULT_STEP = 1e-3
DEFAULT_LAMBDA_FLOOR = 1e-6
DEFAULT_CHRISTOFFEL_STEP = 1e-5

# Parameterizations
AFFINE = "affine"
LAMBDA = "lambda"
PARAMETERIZATIONS = [AFFINE, LAMBDA]

# Termination reasons
COMPLETED = "completed"
LAMBDA_FLOOR_REACHED = "lambda-floor-reached"
STEP_FAILURE = "step-failure"

# Direction classes of x'
NULL = "null"
TIMELIKE = "timelike"
SPACELIKE = "spacelike"

# Closed-form families on Sigma-
NULL_PARABOLA = "null-parabola"
TIMELIKE_HYPERBOLA = "timelike-hyperbola"
SPACELIKE_SEMICIRCLE = "spacelike-semicircle"
CONSTANT_LAMBDA_NULL = "constant-lambda-null"
CLOSED_FORM_KINDS = [NULL_PARABOLA, TIMELIKE_HYPERBOLA, SPACELIKE_SEMICIRCLE, CONSTANT_LAMBDA_NULL]

DEFAULT_DIRECTIONS = {
    NULL_PARABOLA: (1.0, 0.0, 0.0, 1.0),
    TIMELIKE_HYPERBOLA: (0.0, 0.0, 0.0, 1.0),
    SPACELIKE_SEMICIRCLE: (1.0, 0.0, 0.0, 0.0),
    CONSTANT_LAMBDA_NULL: (1.0, 0.0, 0.0, 1.0),
}

# Classical fourth order Runge-Kutta
RK4 = {"label": "Runge-Kutta 4th Order",
       "nodes": [1.0 / 2.0, 1.0 / 2.0, 1.0],
       "weights": [1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0],
       "coeff": [[1.0 / 2.0],
                 [0.0, 1.0 / 2.0],
                 [0.0, 0.0, 1.0]]}


class InvalidStepError(Exception):
    """Raised for non-positive or non-finite integration steps, ranges and
    lambda floors.
    """
    pass


class ParamDomainError(Exception):
    """Raised when a closed-form geodesic is evaluated outside the range of
    its parameter.
    """
    pass


class TooFewSamplesError(Exception):
    pass


class GeodesicState(collections.namedtuple('GeodesicState', ['point', 'velocity'])):
    """A chart point with its velocity.

    The velocity has five components (dx/ds, dlam/ds) for affine states and
    four components dx/dlam for lambda-parameterized states.
    """
    __slots__ = ()

    def __new__(cls, point, velocity):
        if velocity is not None:
            velocity = np.asarray(velocity, dtype=float)
            if velocity.shape not in ((4,), (5,)):
                raise ValueError("A velocity has 4 or 5 components, got shape {}".format(velocity.shape))
        return super(GeodesicState, cls).__new__(cls, point, velocity)


class GeodesicPath(collections.namedtuple('GeodesicPath', [
        'parameters', 'coordinates', 'velocities', 'parameterization',
        'termination', 'domain', 'side'])):
    """A sampled geodesic.

    Attributes:
        parameters (numpy array): strictly monotone parameter values, shape (N,).
        coordinates (numpy array): chart coordinates (x1, x2, x3, x4, lam), shape (N, 5).
        velocities (numpy array): shape (N, 5) for AFFINE paths, (N, 4) for
            LAMBDA paths, or None when the path carries no velocities.
        parameterization (String): AFFINE or LAMBDA.
        termination (String): COMPLETED, LAMBDA_FLOOR_REACHED or STEP_FAILURE.
        domain (String): the chart domain of every sample.
        side (Integer): the chart side of every sample.
    """
    __slots__ = ()

    def __len__(self):
        return len(self.parameters)

    @property
    def points(self):
        return [charts.from_coordinates(self.domain, coordinates, self.side)
                for coordinates in self.coordinates]

    @property
    def states(self):
        if self.velocities is None:
            return [GeodesicState(point, None) for point in self.points]
        return [GeodesicState(point, velocity)
                for point, velocity in zip(self.points, self.velocities)]


def _require_positive_lambda(lam):
    if not lam > 0.0:
        raise charts.InvalidLambdaError("lambda must be positive, got {}".format(lam))


def _require_step(value, label):
    value = float(value)
    if not np.isfinite(value) or value <= 0.0:
        raise InvalidStepError("{} must be a positive real, got {}".format(label, value))
    return value


def christoffel_closed_form(p):
    """Returns gamma[a, b, c] = Gamma^a_{bc} at the chart point p.

    Index 4 is lam. The Sigma+ symbols differ from the Sigma- ones only in
    the sign of Gamma^5_{nu sigma}.
    """
    _require_positive_lambda(p.lam)
    kappa = charts.domain_sign(p.domain)
    gamma = np.zeros((5, 5, 5))
    for mu in range(4):
        gamma[mu, 4, mu] = -1.0 / p.lam
        gamma[mu, mu, 4] = -1.0 / p.lam
        gamma[4, mu, mu] = kappa * ambient.ETA_SIGNS[mu] / p.lam
    gamma[4, 4, 4] = -1.0 / p.lam
    return gamma


def christoffel_numerical(p, h=DEFAULT_CHRISTOFFEL_STEP):
    """Returns the Christoffel symbols of metric_closed_form from central
    differences of the metric with step h.

    Raises:
        StepTooLargeError: h is not smaller than lambda.
    """
    _require_positive_lambda(p.lam)
    h = float(h)
    if not np.isfinite(h) or h <= 0.0 or h >= p.lam:
        raise charts.StepTooLargeError("The step h = {} must lie in (0, lambda = {}).".format(h, p.lam))

    coordinates = p.coordinates
    # dg[c, a, b] = d_c g_ab
    dg = np.zeros((5, 5, 5))
    for c in range(5):
        offset = np.zeros(5)
        offset[c] = h
        forward = charts.from_coordinates(p.domain, coordinates + offset, p.side)
        backward = charts.from_coordinates(p.domain, coordinates - offset, p.side)
        dg[c] = (charts.metric_closed_form(forward) - charts.metric_closed_form(backward)) / (2.0 * h)

    lowered = 0.5 * (dg.transpose(1, 0, 2) + dg.transpose(1, 2, 0) - dg)
    inverse_metric = np.linalg.inv(charts.metric_closed_form(p))
    return np.einsum('ad,dbc->abc', inverse_metric, lowered)


def _affine_field(kappa):
    def field(_, y):
        lam = y[4]
        velocity = y[5:]
        dx = velocity[:4]
        dlam = velocity[4]
        acceleration = np.empty(5)
        acceleration[:4] = 2.0 * dx * dlam / lam
        acceleration[4] = (-kappa * np.sum(ambient.ETA_SIGNS * dx * dx) + dlam * dlam) / lam
        return np.concatenate([velocity, acceleration])
    return field


def _lambda_field(kappa):
    def field(lam, y):
        xprime = y[4:]
        square = np.sum(ambient.ETA_SIGNS * xprime * xprime)
        return np.concatenate([xprime, xprime * (1.0 + kappa * square) / lam])
    return field


def affine_rhs(state):
    """Returns the 10-vector (velocity, acceleration) of the affine geodesic
    equations at an affine state.
    """
    _require_positive_lambda(state.point.lam)
    velocity = np.asarray(state.velocity, dtype=float)
    if velocity.shape != (5,):
        raise ValueError("An affine velocity has 5 components, got shape {}".format(velocity.shape))
    y = np.concatenate([state.point.coordinates, velocity])
    return _affine_field(charts.domain_sign(state.point.domain))(0.0, y)


def lambda_rhs(xprime, lam, domain=charts.SIGMA_MINUS):
    """Returns x'' = x' (1 + k x'^2) / lam for the lambda-parameterized
    geodesic equation, with k = +1 on Sigma- and -1 on Sigma+.
    """
    _require_positive_lambda(lam)
    xprime = ambient.as_minkowski(xprime)
    kappa = charts.domain_sign(domain)
    return xprime * (1.0 + kappa * ambient.minkowski_q(xprime)) / lam


def _runge_kutta_step(butcher, field, t, y, dt, admissible=None):
    """Advances y by one step of the explicit method in `butcher`.

    Returns None when a stage argument fails `admissible`.
    """
    k = [field(t, y)]
    for i, node in enumerate(butcher["nodes"]):
        param = np.copy(y)
        for j, coefficient in enumerate(butcher["coeff"][i]):
            param += coefficient * dt * k[j]
        if admissible is not None and not admissible(param):
            return None
        k.append(field(t + node * dt, param))
    new_y = np.copy(y)
    for weight, slope in zip(butcher["weights"], k):
        new_y += weight * dt * slope
    return new_y


def integrate_affine(initial, s_max, h=DEFAULT_STEP, lambda_floor=DEFAULT_LAMBDA_FLOOR):
    """Integrates the affine geodesic equations with fixed-step RK4 from s = 0
    to s_max.

    The step is s_max / ceil(s_max / h) so the path ends exactly at s_max.
    Integration stops with LAMBDA_FLOOR_REACHED when a stage or the next
    sample would have lam <= lambda_floor and with STEP_FAILURE when the state
    stops being finite.

    Raises:
        InvalidStepError: h, s_max or lambda_floor is not a positive real, or
            the initial lambda is not above the floor.
    """
    h = _require_step(h, "The step h")
    s_max = _require_step(s_max, "s_max")
    lambda_floor = _require_step(lambda_floor, "The lambda floor")
    point = initial.point
    if point.lam <= lambda_floor:
        error_output = ("The initial lambda {} must lie above the lambda floor {}."
                        ).format(point.lam, lambda_floor)
        raise InvalidStepError(error_output)
    velocity = np.asarray(initial.velocity, dtype=float)
    if velocity.shape != (5,):
        raise ValueError("An affine velocity has 5 components, got shape {}".format(velocity.shape))

    count = int(math.ceil(s_max / h))
    step = s_max / count
    field = _affine_field(charts.domain_sign(point.domain))

    # Non-finite stages pass so that they surface as STEP_FAILURE below
    def admissible(y):
        return not np.all(np.isfinite(y)) or y[4] > lambda_floor

    y = np.concatenate([point.coordinates, velocity])
    parameters = [0.0]
    states = [y]
    termination = COMPLETED
    for index in range(1, count + 1):
        with np.errstate(all='ignore'):
            new_y = _runge_kutta_step(RK4, field, parameters[-1], y, step, admissible)
        if new_y is None:
            termination = LAMBDA_FLOOR_REACHED
            break
        if not np.all(np.isfinite(new_y)):
            termination = STEP_FAILURE
            break
        if not admissible(new_y):
            termination = LAMBDA_FLOOR_REACHED
            break
        y = new_y
        parameters.append(index * step)
        states.append(y)

    if termination == STEP_FAILURE:
        logger.warning("Affine integration failed at s = {}: the state is no longer finite".format(parameters[-1]))
    else:
        logger.debug("Affine integration stopped at s = {} ({})".format(parameters[-1], termination))
    states = np.array(states)
    return GeodesicPath(np.array(parameters), states[:, :5], states[:, 5:],
                        AFFINE, termination, point.domain, point.side)


def integrate_lambda(x0, xprime0, lambda0, lambda1, h=DEFAULT_STEP, domain=charts.SIGMA_MINUS, side=1):
    """Integrates x'' = x' (1 + k x'^2) / lam with fixed-step RK4 from lambda0
    to lambda1, in either direction, with ceil(|lambda1 - lambda0| / h)
    uniform steps.
    """
    h = _require_step(h, "The step h")
    lambda0 = _require_step(lambda0, "lambda0")
    lambda1 = _require_step(lambda1, "lambda1")
    x0 = ambient.as_minkowski(x0)
    xprime0 = ambient.as_minkowski(xprime0)
    if lambda0 == lambda1:
        raise InvalidStepError("lambda0 and lambda1 must differ, both are {}".format(lambda0))

    count = int(math.ceil(abs(lambda1 - lambda0) / h))
    step = (lambda1 - lambda0) / count
    field = _lambda_field(charts.domain_sign(domain))

    y = np.concatenate([x0, xprime0])
    parameters = [lambda0]
    states = [y]
    termination = COMPLETED
    for index in range(1, count + 1):
        with np.errstate(all='ignore'):
            new_y = _runge_kutta_step(RK4, field, parameters[-1], y, step)
        if not np.all(np.isfinite(new_y)):
            termination = STEP_FAILURE
            logger.warning("Lambda integration failed at lambda = {}".format(parameters[-1]))
            break
        y = new_y
        parameters.append(lambda1 if index == count else lambda0 + index * step)
        states.append(y)

    logger.debug("Lambda integration stopped at lambda = {} ({})".format(parameters[-1], termination))
    parameters = np.array(parameters)
    states = np.array(states)
    coordinates = np.column_stack([states[:, :4], parameters])
    return GeodesicPath(parameters, coordinates, states[:, 4:], LAMBDA, termination, domain, side)


def classify_direction(xprime, tol=ambient.DEFAULT_TOLERANCE):
    """Returns NULL, TIMELIKE or SPACELIKE from the sign of eta(x', x').

    Values within tol times the tolerance scale are NULL.
    """
    xprime = ambient.as_minkowski(xprime)
    square = ambient.minkowski_q(xprime)
    bound = tol * ambient.tolerance_scale(xprime)
    if abs(square) <= bound:
        return NULL
    elif square < 0.0:
        return TIMELIKE
    return SPACELIKE


def metric_speed(state):
    """Returns g(v, v) for an affine state, with g = metric_closed_form."""
    velocity = np.asarray(state.velocity, dtype=float)
    if velocity.shape != (5,):
        raise ValueError("metric_speed needs an affine velocity, got shape {}".format(velocity.shape))
    return float(velocity.dot(charts.metric_closed_form(state.point)).dot(velocity))


class ClosedFormGeodesic(object):
    """An exact geodesic of Sigma- lying in the plane spanned by a direction n
    and the lam axis.

    With d = x - center, the families are

    * NULL_PARABOLA: d = a lam^2 n, n null
    * TIMELIKE_HYPERBOLA: d = branch sqrt(a^2 + lam^2) n, eta(n, n) = -1
    * SPACELIKE_SEMICIRCLE: d = branch sqrt(a^2 - lam^2) n, eta(n, n) = +1,
      defined for 0 < lam < |a|
    * CONSTANT_LAMBDA_NULL: d = s n at fixed lam, n null

    The first three are parameterized by lam, the last by the affine
    parameter s. Non-null directions are rescaled to eta(n, n) = +-1.
    """

    def __init__(self, kind, a=1.0, center=None, direction=None, branch=1, lam=1.0):
        if kind not in CLOSED_FORM_KINDS:
            raise ParamDomainError("Unknown closed-form geodesic: {}".format(kind))
        if branch not in (1, -1):
            raise ParamDomainError("branch must be +1 or -1, got {}".format(branch))
        self.kind = kind
        self.a = float(a)
        self.branch = int(branch)
        self.lam = float(lam)
        self.center = ambient.as_minkowski(np.zeros(4) if center is None else center)
        self.direction = self._normalized_direction(
            DEFAULT_DIRECTIONS[kind] if direction is None else direction)
        if not np.isfinite(self.a):
            raise ParamDomainError("a must be finite, got {}".format(a))
        if kind == SPACELIKE_SEMICIRCLE and self.a == 0.0:
            raise ParamDomainError("A semicircle needs a != 0")
        if kind == CONSTANT_LAMBDA_NULL:
            _require_positive_lambda(self.lam)

    def _normalized_direction(self, direction):
        direction = ambient.as_minkowski(direction)
        if not np.any(direction):
            raise ParamDomainError("The direction must be nonzero")
        expected = {NULL_PARABOLA: NULL,
                    CONSTANT_LAMBDA_NULL: NULL,
                    TIMELIKE_HYPERBOLA: TIMELIKE,
                    SPACELIKE_SEMICIRCLE: SPACELIKE}[self.kind]
        found = classify_direction(direction)
        if found != expected:
            error_output = ("{} needs a {} direction, {} is {}."
                            ).format(self.kind, expected, direction, found)
            raise ParamDomainError(error_output)
        if found == NULL:
            return direction
        return direction / math.sqrt(abs(ambient.minkowski_q(direction)))

    def __repr__(self):
        return ("ClosedFormGeodesic(kind={}, a={!r}, center={}, direction={}, branch={})"
                ).format(self.kind, self.a, list(self.center), list(self.direction), self.branch)

    @property
    def parameterization(self):
        return AFFINE if self.kind == CONSTANT_LAMBDA_NULL else LAMBDA

    @property
    def sign(self):
        """eta(n, n): 0 for the null families, -1 timelike, +1 spacelike."""
        return {TIMELIKE_HYPERBOLA: -1.0, SPACELIKE_SEMICIRCLE: 1.0}.get(self.kind, 0.0)

    def _require_parameter(self, t):
        t = float(t)
        if not np.isfinite(t):
            raise ParamDomainError("The parameter must be finite, got {}".format(t))
        if self.kind == CONSTANT_LAMBDA_NULL:
            return t
        if t <= 0.0:
            raise ParamDomainError("{} is defined for lambda > 0, got {}".format(self.kind, t))
        if self.kind == SPACELIKE_SEMICIRCLE and t >= abs(self.a):
            error_output = ("The semicircle with a = {} is defined for 0 < lambda < {}, got {}."
                            ).format(self.a, abs(self.a), t)
            raise ParamDomainError(error_output)
        return t

    # d = branch f(lam) n
    def _profile(self, lam):
        if self.kind == NULL_PARABOLA:
            return self.a * lam * lam
        if self.kind == TIMELIKE_HYPERBOLA:
            return math.sqrt(self.a * self.a + lam * lam)
        return math.sqrt(max(self.a * self.a - lam * lam, 0.0))

    def _profile_derivatives(self, lam):
        if self.kind == NULL_PARABOLA:
            return 2.0 * self.a * lam, 2.0 * self.a
        f = self._profile(lam)
        if self.kind == TIMELIKE_HYPERBOLA:
            return lam / f, self.a * self.a / f ** 3
        return -lam / f, -self.a * self.a / f ** 3

    def coordinates(self, t):
        """Returns the chart coordinates (x1, x2, x3, x4, lam) at parameter t."""
        t = self._require_parameter(t)
        if self.kind == CONSTANT_LAMBDA_NULL:
            return np.append(self.center + t * self.direction, self.lam)
        return np.append(self.center + self.branch * self._profile(t) * self.direction, t)

    def position(self, t):
        """Returns the ChartPoint on Sigma- at parameter t."""
        return charts.from_coordinates(charts.SIGMA_MINUS, self.coordinates(t))

    def derivative(self, t):
        """Returns dx/dlam, or dx/ds for CONSTANT_LAMBDA_NULL."""
        t = self._require_parameter(t)
        if self.kind == CONSTANT_LAMBDA_NULL:
            return self.direction.copy()
        fprime, _ = self._profile_derivatives(t)
        return self.branch * fprime * self.direction

    def second_derivative(self, t):
        t = self._require_parameter(t)
        if self.kind == CONSTANT_LAMBDA_NULL:
            return np.zeros(4)
        _, fsecond = self._profile_derivatives(t)
        return self.branch * fsecond * self.direction

    def plane_coordinate(self, x):
        """Returns the coordinate of x - center along n."""
        displacement = ambient.as_minkowski(x) - self.center
        return float(np.dot(displacement, self.direction) / np.dot(self.direction, self.direction))

    def invariant_residual(self, coordinates):
        """Returns how far the chart coordinates (x, lam) are from the
        algebraic relation of the family.

        NULL_PARABOLA uses max |x - center - a lam^2 n|, the hyperbola
        |-eta(d, d) - lam^2 - a^2|, the semicircle |eta(d, d) + lam^2 - a^2| and
        CONSTANT_LAMBDA_NULL the deviation of lam from its constant. The
        deviation of d from the line through n is added to each.
        """
        coordinates = np.asarray(coordinates, dtype=float)
        x, lam = coordinates[:4], float(coordinates[4])
        displacement = x - self.center
        along = self.plane_coordinate(x)
        perpendicular = float(np.max(np.abs(displacement - along * self.direction)))
        if self.kind == NULL_PARABOLA:
            return float(np.max(np.abs(displacement - self.a * lam * lam * self.direction)))
        if self.kind == TIMELIKE_HYPERBOLA:
            square = ambient.minkowski_q(displacement)
            return abs(-square - lam * lam - self.a * self.a) + perpendicular
        if self.kind == SPACELIKE_SEMICIRCLE:
            square = ambient.minkowski_q(displacement)
            return abs(square + lam * lam - self.a * self.a) + perpendicular
        return abs(lam - self.lam) + perpendicular

    def sample(self, parameters):
        """Returns a GeodesicPath of exact samples at the given strictly
        monotone parameters.
        """
        parameters = np.asarray(parameters, dtype=float)
        if parameters.ndim != 1 or len(parameters) == 0:
            raise ParamDomainError("Expected a non-empty list of parameters")
        steps = np.diff(parameters)
        if len(steps) and not (np.all(steps > 0.0) or np.all(steps < 0.0)):
            raise ParamDomainError("The parameters must be strictly monotone")
        coordinates = np.array([self.coordinates(t) for t in parameters])
        if self.kind == CONSTANT_LAMBDA_NULL:
            velocities = np.array([np.append(self.derivative(t), 0.0) for t in parameters])
        else:
            velocities = np.array([self.derivative(t) for t in parameters])
        return GeodesicPath(parameters, coordinates, velocities, self.parameterization,
                            COMPLETED, charts.SIGMA_MINUS, 1)

    def trace(self, count, start=None, stop=None):
        """Returns `count` coordinate rows covering the curve for plotting.

        The semicircle is traced by angle over its whole arc, both branches
        included, with lam = 0 at the two ends. The other families are traced
        uniformly in their parameter from start to stop, and lam = 0 is allowed
        for plotting.
        """
        if count < 2:
            raise TooFewSamplesError("A trace needs at least 2 samples, got {}".format(count))
        if self.kind == SPACELIKE_SEMICIRCLE:
            angles = np.linspace(0.0, math.pi, count)
            radius = abs(self.a)
            rows = [np.append(self.center + radius * math.cos(angle) * self.direction,
                              radius * math.sin(angle))
                    for angle in angles]
            return np.array(rows)
        if start is None or stop is None:
            raise ParamDomainError("{} needs a start and a stop to be traced".format(self.kind))
        if self.kind == CONSTANT_LAMBDA_NULL:
            return np.array([self.coordinates(s) for s in np.linspace(start, stop, count)])
        if start < 0.0:
            raise ParamDomainError("lambda cannot be negative, got {}".format(start))
        rows = []
        for lam in np.linspace(start, stop, count):
            rows.append(np.append(self.center + self.branch * self._profile(lam) * self.direction, lam))
        return np.array(rows)


def closed_form_geodesic(kind, a=1.0, center=None, direction=None, branch=1, lam=1.0):
    """Returns the ClosedFormGeodesic sampler of a family on Sigma-.

    Raises:
        ParamDomainError: unknown kind, wrong direction class, or a semicircle
            with a = 0.
    """
    return ClosedFormGeodesic(kind, a=a, center=center, direction=direction, branch=branch, lam=lam)


def reduced_equation_residual(geodesic, lams, domain=charts.SIGMA_MINUS):
    """Returns max |x'' - x'(1 + k x'^2)/lam| / (1 + |x''|) over lams for a
    lambda-parameterized closed form.
    """
    if geodesic.parameterization != LAMBDA:
        raise ParamDomainError("{} is not parameterized by lambda".format(geodesic.kind))
    worst = 0.0
    for lam in lams:
        second = geodesic.second_derivative(lam)
        expected = lambda_rhs(geodesic.derivative(lam), lam, domain)
        worst = max(worst, float(np.max(np.abs(second - expected)) / (1.0 + np.max(np.abs(second)))))
    return worst


def factorless_equation_residual(geodesic, lams):
    """Returns max |g'' - (1 + e g'^2)/lam| over lams, where g is the plane
    coordinate of a hyperbola (e = -1) or semicircle (e = +1).

    This is the specialized equation with the leading x' factor of the
    reduced equation dropped. The exact closed forms do not satisfy it.
    """
    if geodesic.kind not in (TIMELIKE_HYPERBOLA, SPACELIKE_SEMICIRCLE):
        raise ParamDomainError("{} has no specialized equation".format(geodesic.kind))
    worst = 0.0
    for lam in lams:
        first = geodesic.plane_coordinate(geodesic.center + geodesic.derivative(lam))
        second = geodesic.plane_coordinate(geodesic.center + geodesic.second_derivative(lam))
        worst = max(worst, abs(second - (1.0 + geodesic.sign * first * first) / lam))
    return worst


def initial_state_from_closed_form(geodesic, lam0, lam_rate):
    """Returns the affine GeodesicState on a lambda-parameterized closed form
    at lam0 with dlam/ds = lam_rate.
    """
    if geodesic.parameterization != LAMBDA:
        raise ParamDomainError("{} is not parameterized by lambda".format(geodesic.kind))
    point = geodesic.position(lam0)
    velocity = np.append(geodesic.derivative(lam0) * lam_rate, lam_rate)
    return GeodesicState(point, velocity)


def plane_section_residual(path):
    """Returns sigma_3 / sigma_1 of the 6xN matrix of ambient images of the
    path samples.

    A geodesic lies in a 2-plane through the origin of R^{4,2}, so the ratio
    vanishes up to rounding and integration error.

    Raises:
        TooFewSamplesError: the path has fewer than 3 samples.
    """
    if len(path.coordinates) < 3:
        raise TooFewSamplesError("The plane-section test needs at least 3 samples, got {}".format(len(path.coordinates)))
    images = np.column_stack([charts.chart_to_ambient(point) for point in path.points])
    singular_values = np.linalg.svd(images, compute_uv=False)
    return float(singular_values[2] / singular_values[0])


def reparameterization_residual(path):
    """Returns the worst relative mismatch between lambda_rhs and x'' obtained
    from an affine path by the chain rule

        x' = xdot / lamdot,  x'' = (xddot lamdot - xdot lamddot) / lamdot^3

    over the samples with lamdot != 0.
    """
    if path.parameterization != AFFINE:
        raise ParamDomainError("The chain-rule check needs an affine path")
    worst = None
    for state in path.states:
        dlam = state.velocity[4]
        if abs(dlam) <= ambient.DEFAULT_TOLERANCE * ambient.tolerance_scale(state.velocity):
            continue
        acceleration = affine_rhs(state)[5:]
        dx = state.velocity[:4]
        xprime = dx / dlam
        xsecond = (acceleration[:4] * dlam - dx * acceleration[4]) / dlam ** 3
        expected = lambda_rhs(xprime, state.point.lam, state.point.domain)
        residual = float(np.max(np.abs(xsecond - expected)) / (1.0 + np.max(np.abs(xsecond))))
        worst = residual if worst is None else max(worst, residual)
    if worst is None:
        raise ParamDomainError("dlambda/ds vanishes along the whole path")
    return worst


def direction_drift(path):
    """Returns the largest Euclidean deviation of x'/|x'| from its initial
    value along a lambda-parameterized path, 0 for a zero initial x'.
    """
    if path.parameterization != LAMBDA:
        raise ParamDomainError("The direction check needs a lambda-parameterized path")
    initial = path.velocities[0]
    norm = np.linalg.norm(initial)
    if norm == 0.0:
        return 0.0
    reference = initial / norm
    norms = np.linalg.norm(path.velocities, axis=1)
    return float(np.max(np.abs(path.velocities / norms[:, np.newaxis] - reference)))


def speed_drift(path):
    """Returns max |metric_speed(s) - metric_speed(0)| along an affine path."""
    if path.parameterization != AFFINE:
        raise ParamDomainError("The speed check needs an affine path")
    speeds = [metric_speed(state) for state in path.states]
    return float(max(abs(speed - speeds[0]) for speed in speeds))
