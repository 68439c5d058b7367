"""Tests for the half-space charts of Sigma+- and their metrics."""

# Third-Party Libraries
import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.charts as charts

components = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
minkowski_vectors = st.lists(components, min_size=4, max_size=4).map(np.array)
lambdas = st.floats(min_value=-3.0, max_value=3.0).map(lambda exponent: 10.0 ** exponent)
domains = st.sampled_from(charts.DOMAINS)
sides = st.sampled_from([1, -1])


def test_to_ambient_examples():
    np.testing.assert_array_equal(
        charts.chart_to_ambient(charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), 1.0)),
        [0, 0, 0, 0, 0, -1])
    np.testing.assert_array_equal(
        charts.chart_to_ambient(charts.ChartPoint(charts.SIGMA_PLUS, np.zeros(4), 1.0)),
        [0, 0, 0, 0, 1, 0])
    np.testing.assert_array_equal(
        charts.chart_to_ambient(charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), 1.0, side=-1)),
        [0, 0, 0, 0, 0, 1])


def test_to_chart_examples():
    p = charts.ambient_to_chart([0, 0, 0, 0, 0, -1])
    assert p.domain == charts.SIGMA_MINUS
    assert p.lam == 1.0
    assert p.side == 1
    np.testing.assert_array_equal(p.x, np.zeros(4))

    flipped = charts.ambient_to_chart([0, 0, 0, 0, 0, 1])
    assert flipped.side == -1
    assert flipped.lam == 1.0


@hypothesis.seed(42)
@hypothesis.given(domains, minkowski_vectors, lambdas, sides)
@hypothesis.example(charts.SIGMA_PLUS, np.array([10.0, 10.0, 10.0, 0.0]), 1e-3, 1)
@hypothesis.example(charts.SIGMA_PLUS, np.array([10.0, 10.0, 10.0, 0.0]), 1e-3, -1)
@hypothesis.example(charts.SIGMA_PLUS, np.array([-10.0, 10.0, -10.0, 10.0]), 1e3, 1)
@hypothesis.example(charts.SIGMA_MINUS, np.array([10.0, -10.0, 10.0, 10.0]), 1e-3, 1)
def test_chart_round_trip(domain, x, lam, side):
    p = charts.ChartPoint(domain, x, lam, side)
    X = charts.chart_to_ambient(p)
    assert abs(ambient.quadratic_form(X) - charts.DOMAIN_QUADRATIC_FORM[domain]) <= 1e-9 * ambient.tolerance_scale(X)

    back = charts.ambient_to_chart(X)
    assert back.domain == domain
    assert back.side == side
    assert abs(back.lam - lam) <= 1e-9 * lam
    assert np.max(np.abs(back.x - x)) <= 1e-9 * (1.0 + np.max(np.abs(x)))


def test_domain_infinity_on_sigma_minus():
    with pytest.raises(charts.AtDomainInfinityError) as error:
        charts.ambient_to_chart([0, 0, 0, 1, 2, 2])
    assert error.value.domain == charts.SIGMA_MINUS
    np.testing.assert_array_equal(error.value.point, [0, 0, 0, 1])
    assert error.value.q == -1.0


def test_domain_infinity_on_sigma_plus():
    X = [1, 0, 0, 0, 0.5, 0.5]
    assert charts.is_domain_infinity(X)
    domain, reduced, q = charts.infinity_point(X)
    assert domain == charts.SIGMA_PLUS
    assert q == 1.0
    with pytest.raises(charts.AtDomainInfinityError):
        charts.ambient_to_chart(X)


def test_points_off_sigma_are_rejected():
    with pytest.raises(charts.NotOnSigmaError):
        charts.ambient_to_chart([1, 1, 0, 0, 0, 0])
    with pytest.raises(charts.NotOnSigmaError):
        charts.sigma_domain([0, 0, 0, 0, 1, 1])


@pytest.mark.parametrize("domain", charts.DOMAINS)
@pytest.mark.parametrize("lam", [1e-3, 1e3])
def test_domain_follows_the_sign_of_q(domain, lam):
    X = charts.chart_to_ambient(charts.ChartPoint(domain, [10.0, 10.0, 10.0, 0.0], lam))
    assert charts.sigma_domain(X) == domain
    assert charts.ambient_to_chart(X).domain == domain


def test_sigma_domain_rejects_q_of_the_wrong_size():
    with pytest.raises(charts.NotOnSigmaError):
        charts.sigma_domain([0, 0, 0, 0, 2, 0])
    with pytest.raises(charts.NotOnSigmaError):
        charts.sigma_domain([0, 0, 0, 0, 0, 2])


def test_infinity_band_with_large_x5_plus_x6():
    X = [0.0, 0.0, 0.0, np.sqrt(2001.01), 10000.1, 10000.0]
    assert charts.sigma_domain(X) == charts.SIGMA_MINUS
    assert charts.is_domain_infinity(X)
    with pytest.raises(charts.AtDomainInfinityError) as error:
        charts.ambient_to_chart(X)
    assert error.value.domain == charts.SIGMA_MINUS
    assert error.value.q < 0.0


@pytest.mark.parametrize("domain", charts.DOMAINS)
@pytest.mark.parametrize("side", [1, -1])
def test_minkowski_slice(domain, side):
    x = np.array([0.5, -2.0, 3.0, 1.5])
    p = charts.minkowski_slice(x, domain, side)
    assert p.lam == 1.0
    assert p.domain == domain
    np.testing.assert_array_equal(charts.metric_closed_form(p)[:4, :4], ambient.ETA)
    X = charts.chart_to_ambient(p)
    np.testing.assert_array_equal(X[:4], side * x)
    assert abs(X[4] - X[5] - side) <= 1e-12


@pytest.mark.parametrize("lam", [0.0, -1.0, float("nan"), float("inf")])
def test_chart_point_rejects_invalid_lambda(lam):
    with pytest.raises(charts.InvalidLambdaError):
        charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), lam)


def test_chart_point_rejects_bad_domain_and_side():
    with pytest.raises(ValueError):
        charts.ChartPoint("sigma", np.zeros(4), 1.0)
    with pytest.raises(ValueError):
        charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), 1.0, side=0)


def test_metric_closed_form():
    g = charts.metric_closed_form(charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), 2.0))
    np.testing.assert_array_equal(g, np.diag([0.25, 0.25, 0.25, -0.25, 0.25]))
    g_plus = charts.metric_closed_form(charts.ChartPoint(charts.SIGMA_PLUS, [1, 2, 3, 4], 1.0))
    np.testing.assert_array_equal(g_plus, np.diag([1.0, 1.0, 1.0, -1.0, -1.0]))


@pytest.mark.parametrize("domain", charts.DOMAINS)
def test_metric_signature(domain):
    p = charts.ChartPoint(domain, [0.3, -0.2, 0.1, 0.5], 0.7)
    assert charts.metric_signature(charts.metric_closed_form(p)) == charts.expected_signature(domain)
    assert charts.metric_signature(charts.metric_numerical(p)) == charts.expected_signature(domain)


@hypothesis.seed(42)
@hypothesis.settings(max_examples=50)
@hypothesis.given(domains,
                  st.lists(st.floats(min_value=-1.0, max_value=1.0), min_size=4, max_size=4).map(np.array),
                  st.floats(min_value=0.5, max_value=2.0))
def test_metric_numerical_matches_closed_form(domain, x, lam):
    p = charts.ChartPoint(domain, x, lam)
    deviation = np.max(np.abs(charts.metric_numerical(p, 1e-5) - charts.metric_closed_form(p)))
    assert deviation <= 1e-6 / lam ** 2


def test_metric_numerical_sigma_plus_example():
    p = charts.ChartPoint(charts.SIGMA_PLUS, np.zeros(4), 1.0)
    deviation = np.max(np.abs(charts.metric_numerical(p, 1e-5) - charts.metric_closed_form(p)))
    assert deviation <= 1e-8


def test_difference_step_must_stay_in_the_half_space():
    p = charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), 1e-6)
    with pytest.raises(charts.StepTooLargeError):
        charts.metric_numerical(p)
    with pytest.raises(charts.StepTooLargeError):
        charts.metric_numerical(charts.ChartPoint(charts.SIGMA_MINUS, np.zeros(4), 1.0), h=1.0)
    with pytest.raises(charts.StepTooLargeError):
        charts.difference_steps(np.zeros(5), h=0.0)


def test_coordinates_round_trip_through_from_coordinates():
    p = charts.ChartPoint(charts.SIGMA_PLUS, [1, 2, 3, 4], 5.0, side=-1)
    np.testing.assert_array_equal(charts.chart_coordinates(p), [1, 2, 3, 4, 5])
    assert charts.from_coordinates(p.domain, p.coordinates, p.side).side == -1
