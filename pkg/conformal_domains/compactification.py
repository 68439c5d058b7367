"""Embeddings of Minkowski space into the null cone of R^{4,2}.

tau_plus(x) = (x, (1 - q(x))/2, -(1 + q(x))/2) lies on the section
X5 - X6 = 1 of the cone and tau_minus = -tau_plus on X5 - X6 = -1. Rays with
X5 = X6 form conformal infinity. Oriented rays of the cone double cover the
compactified Minkowski space; `antipode` exchanges the two sheets.
"""

# Python Standard Libraries
import collections
import logging
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.ambient as ambient

logger = logging.getLogger(__name__)


class NotOnConeError(Exception):
    """Raised when an ambient vector off the null cone is projected."""
    pass


class ConeProjection(collections.namedtuple('ConeProjection', ['point', 'infinity'])):
    """The image of a cone ray in compactified Minkowski space.

    Exactly one field is set: `point` for a finite Minkowski vector, or
    `infinity` for the unit-norm ambient representative of a ray at
    conformal infinity.
    """
    __slots__ = ()

    @property
    def is_at_infinity(self):
        return self.infinity is not None


def tau(x):
    """Returns the null cone embedding of x on the section X5 - X6 = 1."""
    x = ambient.as_minkowski(x)
    q = ambient.minkowski_q(x)
    return np.concatenate([x, [(1.0 - q) / 2.0, -(1.0 + q) / 2.0]])


def tau_plus(x):
    return tau(x)


def tau_minus(x):
    return -tau_plus(x)


def _require_cone(X, tol):
    region = ambient.classify(X, tol)
    if region != ambient.CONE:
        error_output = ("Q(X) = {} places X in {}, not on the null cone."
                        ).format(ambient.quadratic_form(X), region)
        raise NotOnConeError(error_output)


def infinity_representative(X, relation=ambient.ORIENTED, tol=ambient.DEFAULT_TOLERANCE):
    """Returns X scaled to unit Euclidean norm.

    For PROJECTIVE rays the sign is fixed so the first component above tol in
    magnitude is positive; ORIENTED rays keep their sign.
    """
    if relation not in ambient.RELATIONS:
        raise ValueError("Unknown equivalence relation: {}".format(relation))
    representative = X / np.linalg.norm(X)
    if relation == ambient.PROJECTIVE:
        for component in representative:
            if abs(component) > tol:
                if component < 0.0:
                    representative = -representative
                break
    return representative


def cone_to_minkowski(X, tol=ambient.DEFAULT_TOLERANCE, relation=ambient.ORIENTED):
    """Projects a cone point onto compactified Minkowski space.

    Returns:
        ConeProjection with `point` = (X1..X4)/(X5 - X6) when X5 - X6 is above
        tol times the tolerance scale, otherwise with `infinity` set.

    Raises:
        NotOnConeError: X is not on the null cone.
    """
    X = ambient.as_ambient(X)
    _require_cone(X, tol)
    difference = X[4] - X[5]
    if abs(difference) > tol * ambient.tolerance_scale(X):
        return ConeProjection(X[:4] / difference, None)
    logger.debug("Cone point {} projects onto conformal infinity".format(X))
    return ConeProjection(None, infinity_representative(X, relation, tol))


def is_conformal_infinity(X, tol=ambient.DEFAULT_TOLERANCE):
    X = ambient.as_ambient(X)
    _require_cone(X, tol)
    return abs(X[4] - X[5]) <= tol * ambient.tolerance_scale(X)


def antipode(X, tol=ambient.DEFAULT_TOLERANCE):
    """Returns -X, the other preimage of the same projective ray."""
    X = ambient.as_ambient(X)
    if np.max(np.abs(X)) <= tol:
        raise ambient.ApexError("The apex of the null cone has no antipode.")
    return -X


def polarization(x, y):
    """Returns the pair ((tau_plus(x), tau_plus(y)), -q(x - y)/2).

    The two values agree identically; comparing them checks the embedding.
    """
    x = ambient.as_minkowski(x)
    y = ambient.as_minkowski(y)
    return (ambient.inner(tau_plus(x), tau_plus(y)),
            -ambient.minkowski_q(x - y) / 2.0)
