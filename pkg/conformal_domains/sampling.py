"""Seeded random inputs for the property suites."""

# Python Standard Libraries
import logging
import zlib
# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.charts as charts
import conformal_domains.group_action as group_action

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
MAX_GENERATORS = 5
MAX_ANGLE = 1.0
MAX_VECTOR_COMPONENT = 1.0


def derive_seed(seed, name):
    """Returns a per-name seed so that a check draws the same numbers in any
    execution order.
    """
    return (int(seed) * 1000003 + zlib.crc32(name.encode("utf-8"))) % (2 ** 32)


class Sampler(object):
    """Draws vectors, chart points and group elements from a numpy Generator."""

    def __init__(self, seed=DEFAULT_SEED):
        self.seed = seed
        self.generator = np.random.default_rng(seed)

    def uniform(self, low, high, size=None):
        return self.generator.uniform(low, high, size)

    def minkowski(self, bound=10.0):
        return self.generator.uniform(-bound, bound, 4)

    def ambient_vector(self, bound=10.0):
        return self.generator.uniform(-bound, bound, 6)

    def lam(self, low=1e-3, high=1e3, logarithmic=True):
        if logarithmic:
            return float(np.exp(self.generator.uniform(np.log(low), np.log(high))))
        return float(self.generator.uniform(low, high))

    def side(self):
        return int(self.generator.choice([1, -1]))

    def domain(self):
        return charts.DOMAINS[int(self.generator.integers(len(charts.DOMAINS)))]

    def chart_point(self, domain=None, x_bound=10.0, lam_range=(1e-3, 1e3), logarithmic=True, side=None):
        """Returns a random ChartPoint, on a random domain and side unless
        given.
        """
        domain = self.domain() if domain is None else domain
        side = self.side() if side is None else side
        return charts.ChartPoint(domain, self.minkowski(x_bound), self.lam(lam_range[0], lam_range[1], logarithmic), side)

    def generator_spec(self, max_angle=MAX_ANGLE, max_component=MAX_VECTOR_COMPONENT):
        kind = group_action.KINDS[int(self.generator.integers(len(group_action.KINDS)))]
        if kind == group_action.ROTATION:
            i, j = sorted(self.generator.choice(6, size=2, replace=False) + 1)
            return group_action.rotation(int(i), int(j), float(self.generator.uniform(-max_angle, max_angle)))
        if kind == group_action.DILATION:
            return group_action.dilation(float(self.generator.uniform(-max_angle, max_angle)))
        if kind == group_action.TRANSLATION:
            return group_action.translation(self.generator.uniform(-max_component, max_component, 4))
        if kind == group_action.SPECIAL_CONFORMAL:
            return group_action.special_conformal(self.generator.uniform(-max_component, max_component, 4))
        return group_action.inversion()

    def group_element(self, max_generators=MAX_GENERATORS):
        """Returns (matrix, specs) for a product of 1 to max_generators random
        generators.
        """
        count = int(self.generator.integers(1, max_generators + 1))
        specs = [self.generator_spec() for _ in range(count)]
        return group_action.compose(*specs), specs

    def euclidean_motion(self, max_generators=MAX_GENERATORS, max_angle=MAX_ANGLE,
                         max_component=MAX_VECTOR_COMPONENT):
        """Returns (matrix, specs) for a product of 1 to max_generators spatial
        rotations and translations. These fix X5 - X6 of every ambient vector.
        """
        specs = []
        for _ in range(int(self.generator.integers(1, max_generators + 1))):
            if self.generator.integers(2):
                i, j = sorted(self.generator.choice(3, size=2, replace=False) + 1)
                angle = float(self.generator.uniform(-max_angle, max_angle))
                specs.append(group_action.rotation(int(i), int(j), angle))
            else:
                specs.append(group_action.translation(self.generator.uniform(-max_component, max_component, 4)))
        return group_action.compose(*specs), specs

    def chart_isometry_pair(self, domain=None, lam_range=(0.5, 2.0), x_bound=1.0,
                            image_lam_range=(0.2, 5.0), image_x_bound=10.0, attempts=1000):
        """Returns (matrix, specs, point) whose image under act_chart stays
        within the given lambda range and coordinate bound.

        Draws that leave these bounds or reach domain infinity are redrawn.
        """
        for _ in range(attempts):
            matrix, specs = self.group_element()
            point = self.chart_point(domain, x_bound, lam_range, logarithmic=False, side=1)
            try:
                image = group_action.act_chart(matrix, point)
            except charts.AtDomainInfinityError:
                logger.debug("Rejected {}: image at domain infinity".format(specs))
                continue
            inside = (image_lam_range[0] <= image.lam <= image_lam_range[1] and
                      np.max(np.abs(image.x)) <= image_x_bound)
            if inside:
                return matrix, specs, point
            logger.debug("Rejected {}: image {} outside the sampling box".format(specs, image))
        raise RuntimeError("No admissible group element found in {} attempts".format(attempts))
