"""Linear algebra of the ambient space R^{4,2} and of Minkowski space R^{3,1}.

Ambient vectors carry six components X1..X6 with the scalar product

    (X, Y) = X1 Y1 + X2 Y2 + X3 Y3 - X4 Y4 + X5 Y5 - X6 Y6

and Minkowski vectors carry four components x1..x4 with x4 timelike. All
vectors are numpy float arrays. Approximate comparisons use an absolute
tolerance multiplied by `tolerance_scale` of the inputs, since the quadratic
forms grow with the square of the coordinates.
"""

# Python Standard Libraries
import logging
# Third-Party Libraries
import numpy as np
# Custom Libraries
# N/A

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9

METRIC = np.diag([1.0, 1.0, 1.0, -1.0, 1.0, -1.0])
ETA = np.diag([1.0, 1.0, 1.0, -1.0])
METRIC_SIGNS = np.diag(METRIC).copy()
ETA_SIGNS = np.diag(ETA).copy()

# Regions of R^{4,2} minus the apex
CONE = "cone"
D_PLUS = "d_plus"
D_MINUS = "d_minus"
REGIONS = [CONE, D_PLUS, D_MINUS]

# Ray equivalence relations
PROJECTIVE = "projective"
ORIENTED = "oriented"
RELATIONS = [PROJECTIVE, ORIENTED]


class ApexError(Exception):
    """Raised when a nonzero ambient vector is required and the apex of the
    cone (the zero vector) was supplied.
    """
    pass


class OnConeError(Exception):
    """Raised when a vector on the null cone is passed where a point of D+ or
    D- is required.
    """
    pass


def _as_vector(values, size, label):
    vector = np.asarray(values, dtype=float)
    if vector.shape != (size,):
        error_output = ("{} must have {} components, got shape {}."
                        ).format(label, size, vector.shape)
        raise ValueError(error_output)
    if not np.all(np.isfinite(vector)):
        raise ValueError("{} has non-finite components: {}".format(label, vector))
    return vector


def as_ambient(X):
    """Returns X as a validated float array of shape (6,)."""
    return _as_vector(X, 6, "Ambient vector")


def as_minkowski(x):
    """Returns x as a validated float array of shape (4,)."""
    return _as_vector(x, 4, "Minkowski vector")


def tolerance_scale(*vectors):
    """Returns 1 plus the sum of the squared Euclidean norms of the vectors."""
    return 1.0 + sum(float(np.dot(vector, vector)) for vector in vectors)


def inner(X, Y):
    """Returns the O(4,2) scalar product of two ambient vectors."""
    X = as_ambient(X)
    Y = as_ambient(Y)
    return float(np.sum(METRIC_SIGNS * X * Y))


def quadratic_form(X):
    """Returns Q(X) = (X, X)."""
    return inner(X, X)


def minkowski_inner(x, y):
    """Returns the Minkowski scalar product with eta = diag(1, 1, 1, -1)."""
    x = as_minkowski(x)
    y = as_minkowski(y)
    return float(np.sum(ETA_SIGNS * x * y))


def minkowski_q(x):
    """Returns q(x) = x1^2 + x2^2 + x3^2 - x4^2."""
    return minkowski_inner(x, x)


def _require_nonzero(X, tol):
    if np.max(np.abs(X)) <= tol:
        raise ApexError("The apex of the null cone is excluded: {}".format(X))


def classify(X, tol=DEFAULT_TOLERANCE):
    """Returns the region containing X: CONE, D_PLUS or D_MINUS.

    Raises:
        ApexError: every component of X is below tol in magnitude.
    """
    X = as_ambient(X)
    _require_nonzero(X, tol)
    value = quadratic_form(X)
    bound = tol * tolerance_scale(X)
    if abs(value) <= bound:
        return CONE
    elif value > bound:
        return D_PLUS
    return D_MINUS


def normalize_to_sigma(X, tol=DEFAULT_TOLERANCE):
    """Returns X / sqrt|Q(X)|, the positive multiple of X lying on Sigma+
    (Q = +1) or Sigma- (Q = -1).

    Raises:
        ApexError: X is the zero vector.
        OnConeError: |Q(X)| is within tolerance of zero.
    """
    X = as_ambient(X)
    _require_nonzero(X, tol)
    value = quadratic_form(X)
    if abs(value) <= tol * tolerance_scale(X):
        raise OnConeError("Q(X) = {} is on the null cone and cannot be normalized.".format(value))
    return X / np.sqrt(abs(value))


def ray_equivalent(X, Y, relation=ORIENTED, tol=DEFAULT_TOLERANCE):
    """Returns True when X = cY for a scalar c, with c != 0 for PROJECTIVE and
    c > 0 for ORIENTED.

    The scalar is read off the largest-magnitude component of Y.
    """
    if relation not in RELATIONS:
        raise ValueError("Unknown equivalence relation: {}".format(relation))
    X = as_ambient(X)
    Y = as_ambient(Y)
    _require_nonzero(X, tol)
    _require_nonzero(Y, tol)

    pivot = int(np.argmax(np.abs(Y)))
    factor = X[pivot] / Y[pivot]
    if factor == 0.0:
        return False
    if relation == ORIENTED and factor < 0.0:
        return False

    deviation = float(np.max(np.abs(X - factor * Y)))
    return deviation <= tol * tolerance_scale(X, Y)
