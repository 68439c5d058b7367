# Python Standard Libraries
import math
# Third-Party Libraries
import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest
import scipy.linalg
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts
import conformal_domains.geodesics as geodesics
import conformal_domains.group_action as group_action
import conformal_domains.sampling as sampling

angles = st.floats(min_value=-1.0, max_value=1.0)
small_vectors = st.lists(st.floats(min_value=-1.0, max_value=1.0), min_size=4, max_size=4).map(np.array)
minkowski_vectors = st.lists(st.floats(min_value=-5.0, max_value=5.0), min_size=4, max_size=4).map(np.array)


def _plane_generator(i, j):
    """Returns the Lie algebra element of the (i, j) plane, 1-based axes."""
    generator = np.zeros((6, 6))
    i, j = i - 1, j - 1
    if ambient.METRIC_SIGNS[i] == ambient.METRIC_SIGNS[j]:
        generator[i, j] = -1.0
        generator[j, i] = 1.0
    else:
        generator[i, j] = 1.0
        generator[j, i] = 1.0
    return generator


def _translation_generator(a):
    generator = np.zeros((6, 6))
    generator[:4, 4] = a
    generator[:4, 5] = -a
    generator[4, :4] = -ambient.ETA_SIGNS * a
    generator[5, :4] = -ambient.ETA_SIGNS * a
    return generator


@hypothesis.seed(42)
@hypothesis.given(st.sampled_from([(i, j) for i in range(1, 7) for j in range(i + 1, 7)]), angles)
def test_rotations_match_matrix_exponentials(plane, theta):
    expected = scipy.linalg.expm(theta * _plane_generator(*plane))
    np.testing.assert_allclose(group_action.generator(group_action.rotation(plane[0], plane[1], theta)),
                               expected, atol=1e-12)


@hypothesis.seed(42)
@hypothesis.given(angles)
def test_dilation_is_the_five_six_boost(theta):
    np.testing.assert_allclose(group_action.generator(group_action.dilation(theta)),
                               scipy.linalg.expm(theta * _plane_generator(5, 6)), atol=1e-12)


@hypothesis.seed(42)
@hypothesis.given(small_vectors)
def test_translations_match_nilpotent_exponentials(a):
    np.testing.assert_allclose(group_action.generator(group_action.translation(a)),
                               scipy.linalg.expm(_translation_generator(a)), atol=1e-12)


@hypothesis.seed(42)
@hypothesis.settings(max_examples=50)
@hypothesis.given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_random_group_elements_preserve_the_scalar_product(seed):
    matrix, specs = sampling.Sampler(seed).group_element()
    assert group_action.conformal_residual(matrix) <= 1e-12
    assert group_action.is_conformal_matrix(matrix, tol=1e-9 * (1.0 + np.max(np.abs(matrix)) ** 2))
    np.testing.assert_allclose(group_action.inverse(matrix).dot(matrix), np.eye(6), atol=1e-9 * np.max(np.abs(matrix)) ** 2)


def test_inversion_and_special_conformal():
    np.testing.assert_array_equal(group_action.generator(group_action.inversion()),
                                  np.diag([1, 1, 1, 1, -1, 1]))
    np.testing.assert_allclose(group_action.generator(group_action.special_conformal(np.zeros(4))), np.eye(6))


def test_compose_applies_the_last_spec_first():
    a = np.array([1.0, 0.0, 0.0, 0.0])
    b = np.array([0.0, 2.0, 0.0, 1.0])
    np.testing.assert_allclose(group_action.compose(group_action.translation(a), group_action.translation(b)),
                               group_action.generator(group_action.translation(a + b)), atol=1e-12)
    rotated_then_translated = group_action.compose(group_action.translation(a), group_action.rotation(1, 2, math.pi / 2))
    projection, _ = group_action.act_minkowski(rotated_then_translated, [1.0, 0.0, 0.0, 0.0])
    np.testing.assert_allclose(projection.point, [1.0, 1.0, 0.0, 0.0], atol=1e-12)


@pytest.mark.parametrize("spec", [
    group_action.rotation(2, 1, 0.1),
    group_action.rotation(0, 1, 0.1),
    group_action.rotation(1, 7, 0.1),
    group_action.dilation(float("nan")),
    group_action.translation([1.0, 2.0, 3.0]),
    group_action.GeneratorSpec("shear", None, None, None),
])
def test_invalid_specs(spec):
    with pytest.raises(group_action.InvalidSpecError):
        group_action.generator(spec)


@hypothesis.seed(42)
@hypothesis.given(minkowski_vectors, angles)
def test_dilation_scales_minkowski_points(x, theta):
    projection, scale = group_action.act_minkowski(group_action.generator(group_action.dilation(theta)), x)
    assert np.max(np.abs(projection.point - math.exp(theta) * x)) <= 1e-9 * (1.0 + np.max(np.abs(x)))
    assert scale == pytest.approx(math.exp(theta), rel=1e-12)


@hypothesis.seed(42)
@hypothesis.given(minkowski_vectors, small_vectors)
def test_translation_shifts_minkowski_points(x, a):
    projection, scale = group_action.act_minkowski(group_action.generator(group_action.translation(a)), x)
    assert np.max(np.abs(projection.point - (x + a))) <= 1e-9 * (1.0 + np.max(np.abs(x)))
    assert scale == pytest.approx(1.0)


def test_inversion_on_minkowski_points():
    inversion = group_action.generator(group_action.inversion())
    projection, scale = group_action.act_minkowski(inversion, [2.0, 0.0, 0.0, 0.0])
    np.testing.assert_allclose(projection.point, [0.5, 0.0, 0.0, 0.0])
    assert scale == pytest.approx(0.25)

    factor, residual = group_action.minkowski_conformality(inversion, [2.0, 0.0, 0.0, 0.0])
    assert factor == pytest.approx(1.0 / 16.0, rel=1e-6)
    assert residual <= 1e-5

    light_like, scale = group_action.act_minkowski(inversion, [1.0, 0.0, 0.0, 1.0])
    assert light_like.is_at_infinity
    assert scale is None
    with pytest.raises(group_action.AtConformalInfinityError):
        group_action.minkowski_conformality(inversion, [1.0, 0.0, 0.0, 1.0])


def test_translation_is_an_isometry_of_minkowski_space():
    factor, residual = group_action.minkowski_conformality(
        group_action.generator(group_action.translation([0.3, -0.2, 0.1, 0.4])), [1.0, 2.0, 0.5, -1.0])
    assert factor == pytest.approx(1.0, rel=1e-8)
    assert residual <= 1e-8


@pytest.mark.parametrize("domain", charts.DOMAINS)
def test_chart_action_of_dilations_and_translations(domain):
    p = charts.ChartPoint(domain, [0.5, -1.0, 0.25, 2.0], 0.8)
    dilated = group_action.act_chart(group_action.generator(group_action.dilation(0.3)), p)
    np.testing.assert_allclose(dilated.coordinates, math.exp(0.3) * p.coordinates, rtol=1e-12)
    assert dilated.domain == domain

    shift = np.array([1.0, 0.0, -2.0, 0.5])
    translated = group_action.act_chart(group_action.generator(group_action.translation(shift)), p)
    np.testing.assert_allclose(translated.x, p.x + shift, atol=1e-12)
    assert translated.lam == pytest.approx(p.lam, rel=1e-12)


@pytest.mark.parametrize("spec", [
    group_action.dilation(0.4),
    group_action.translation([0.5, 0.0, 0.0, 0.2]),
    group_action.rotation(1, 4, 0.3),
    group_action.special_conformal([0.1, 0.0, 0.05, 0.0]),
])
def test_pullback_metric(spec):
    p = charts.ChartPoint(charts.SIGMA_MINUS, [0.1, 0.2, -0.1, 0.3], 1.0)
    assert group_action.pullback_metric_residual(group_action.generator(spec), p) <= 1e-6


def test_pullback_stencil_must_fit_in_the_half_space():
    p = charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), 1e-3)
    with pytest.raises(charts.StepTooLargeError):
        group_action.pullback_metric_residual(np.eye(6), p, h=1e-3)


def test_transformed_geodesics_stay_plane_sections():
    semicircle = geodesics.closed_form_geodesic(geodesics.SPACELIKE_SEMICIRCLE, a=math.sqrt(2.0))
    path = semicircle.sample(np.linspace(0.2, 1.3, 30))
    M = group_action.compose(group_action.rotation(1, 2, 0.4), group_action.translation([0.2, 0.1, 0.0, -0.3]))
    image = group_action.transform_path(M, path)
    assert len(image) == len(path)
    assert image.velocities is None
    assert geodesics.plane_section_residual(image) <= 1e-10


def test_act_chart_reports_domain_infinity():
    # q(x) = -lambda^2 gives X5 = -X6, which the inversion turns into X5 = X6
    p = charts.ChartPoint(charts.SIGMA_MINUS, [0.0, 0.0, 0.0, 1.0], 1.0)
    X = charts.chart_to_ambient(p)
    assert X[4] == -X[5]
    flip = group_action.generator(group_action.inversion())
    with pytest.raises(charts.AtDomainInfinityError):
        group_action.act_chart(flip, p)
