# Third-Party Libraries
import numpy as np
# Custom Libraries
import conformal_domains.charts as charts
import conformal_domains.group_action as group_action
import conformal_domains.sampling as sampling


def test_derive_seed_depends_on_seed_and_name():
    assert sampling.derive_seed(42, "check_a") == sampling.derive_seed(42, "check_a")
    assert sampling.derive_seed(42, "check_a") != sampling.derive_seed(42, "check_b")
    assert sampling.derive_seed(42, "check_a") != sampling.derive_seed(7, "check_a")
    assert 0 <= sampling.derive_seed(2 ** 40, "check_a") < 2 ** 32


def test_samplers_are_reproducible():
    first = sampling.Sampler(3)
    second = sampling.Sampler(3)
    np.testing.assert_array_equal(first.minkowski(), second.minkowski())
    assert first.chart_point().coordinates.tolist() == second.chart_point().coordinates.tolist()
    assert repr(first.group_element()[1]) == repr(second.group_element()[1])


def test_chart_point_ranges():
    sampler = sampling.Sampler(11)
    for _ in range(200):
        p = sampler.chart_point(x_bound=2.0, lam_range=(0.5, 2.0), logarithmic=False)
        assert p.domain in charts.DOMAINS
        assert p.side in (1, -1)
        assert 0.5 <= p.lam <= 2.0
        assert np.max(np.abs(p.x)) <= 2.0


def test_group_elements_are_products_of_generators():
    sampler = sampling.Sampler(5)
    for _ in range(50):
        matrix, specs = sampler.group_element()
        assert 1 <= len(specs) <= sampling.MAX_GENERATORS
        np.testing.assert_allclose(matrix, group_action.compose(*specs))


def test_chart_isometry_pair_stays_in_the_box():
    sampler = sampling.Sampler(8)
    for _ in range(20):
        matrix, specs, point = sampler.chart_isometry_pair(charts.SIGMA_MINUS)
        image = group_action.act_chart(matrix, point)
        assert 0.2 <= image.lam <= 5.0
        assert np.max(np.abs(image.x)) <= 10.0
