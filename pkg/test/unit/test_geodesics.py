"""Tests for the Christoffel symbols, the integrators and the closed-form
geodesics of Sigma-.
"""

# Python Standard Libraries
import math
# Third-Party Libraries
import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest
# Custom Libraries
import conformal_domains.charts as charts
import conformal_domains.geodesics as geodesics

NULL_DIRECTION = np.array([1.0, 0.0, 0.0, 1.0])


def _point(lam=1.0, x=(0.0, 0.0, 0.0, 0.0), domain=charts.SIGMA_MINUS):
    return charts.ChartPoint(domain, np.array(x, dtype=float), lam)


def test_christoffel_closed_form_entries():
    gamma = geodesics.christoffel_closed_form(_point(2.0))
    assert gamma[0, 4, 0] == -0.5
    assert gamma[0, 0, 4] == -0.5
    assert gamma[4, 0, 0] == 0.5
    assert gamma[4, 3, 3] == -0.5
    assert gamma[4, 4, 4] == -0.5
    assert np.count_nonzero(gamma) == 13


def test_christoffel_sigma_plus_flips_the_lambda_row():
    minus = geodesics.christoffel_closed_form(_point(1.0))
    plus = geodesics.christoffel_closed_form(_point(1.0, domain=charts.SIGMA_PLUS))
    for mu in range(4):
        assert plus[4, mu, mu] == -minus[4, mu, mu]
    assert plus[4, 4, 4] == minus[4, 4, 4]
    np.testing.assert_array_equal(plus[:4], minus[:4])


@hypothesis.seed(42)
@hypothesis.settings(max_examples=50)
@hypothesis.given(st.sampled_from(charts.DOMAINS),
                  st.floats(min_value=-2.0, max_value=2.0).map(lambda exponent: 10.0 ** exponent),
                  st.lists(st.floats(min_value=-10.0, max_value=10.0), min_size=4, max_size=4))
def test_christoffel_numerical_matches_closed_form(domain, lam, x):
    p = _point(lam, x, domain)
    h = geodesics.DEFAULT_CHRISTOFFEL_STEP * lam
    deviation = np.max(np.abs(geodesics.christoffel_numerical(p, h) - geodesics.christoffel_closed_form(p)))
    assert deviation <= 1e-4 / lam


def test_christoffel_numerical_step_must_be_below_lambda():
    with pytest.raises(charts.StepTooLargeError):
        geodesics.christoffel_numerical(_point(1e-6), 1e-5)


def test_constant_lambda_null_line():
    initial = geodesics.GeodesicState(_point(), np.append(NULL_DIRECTION, 0.0))
    path = geodesics.integrate_affine(initial, 5.0, 1e-3)
    assert path.termination == geodesics.COMPLETED
    assert path.parameters[-1] == pytest.approx(5.0)
    assert np.max(np.abs(path.coordinates[:, 4] - 1.0)) <= 1e-10
    np.testing.assert_allclose(path.coordinates[-1, :4], 5.0 * NULL_DIRECTION, atol=1e-9)


def test_zero_velocity_stays_put():
    initial = geodesics.GeodesicState(_point(1.5, (1, 2, 3, 4)), np.zeros(5))
    path = geodesics.integrate_affine(initial, 1.0, 0.1)
    assert len(path) == 11
    assert np.all(path.coordinates == path.coordinates[0])


def test_lambda_floor_stops_integration():
    initial = geodesics.GeodesicState(_point(), np.array([0.0, 0.0, 0.0, 0.0, -1.0]))
    path = geodesics.integrate_affine(initial, 1.0, 1e-3, lambda_floor=0.5)
    assert path.termination == geodesics.LAMBDA_FLOOR_REACHED
    assert np.all(path.coordinates[:, 4] > 0.5)
    # lambda = exp(-s) along this geodesic
    assert path.parameters[-1] == pytest.approx(math.log(2.0), abs=2e-3)


@pytest.mark.parametrize("s_max,h,floor", [(1.0, 0.0, 1e-6), (-1.0, 1e-3, 1e-6), (1.0, 1e-3, 2.0), (1.0, float("nan"), 1e-6)])
def test_integrate_affine_rejects_invalid_steps(s_max, h, floor):
    initial = geodesics.GeodesicState(_point(), np.zeros(5))
    with pytest.raises(geodesics.InvalidStepError):
        geodesics.integrate_affine(initial, s_max, h, floor)


def test_integrate_lambda_reproduces_the_null_parabola():
    path = geodesics.integrate_lambda(NULL_DIRECTION, 2.0 * NULL_DIRECTION, 1.0, 2.0, 1e-3)
    assert path.parameters[-1] == 2.0
    np.testing.assert_allclose(path.coordinates[-1], np.append(4.0 * NULL_DIRECTION, 2.0), atol=1e-8)
    assert geodesics.direction_drift(path) <= 1e-12


def test_integrate_lambda_runs_backwards():
    parabola = geodesics.closed_form_geodesic(geodesics.NULL_PARABOLA)
    path = geodesics.integrate_lambda(parabola.coordinates(2.0)[:4], parabola.derivative(2.0), 2.0, 1.0, 1e-3)
    np.testing.assert_allclose(path.coordinates[-1], parabola.coordinates(1.0), atol=1e-8)


def test_integrate_lambda_rejects_equal_endpoints():
    with pytest.raises(geodesics.InvalidStepError):
        geodesics.integrate_lambda(np.zeros(4), np.zeros(4), 1.0, 1.0)


@pytest.mark.parametrize("xprime,expected", [
    ([1, 0, 0, 1], geodesics.NULL),
    ([0, 0, 0, 1], geodesics.TIMELIKE),
    ([1, 0, 0, 0], geodesics.SPACELIKE),
])
def test_classify_direction(xprime, expected):
    assert geodesics.classify_direction(xprime) == expected


def test_lambda_rhs_by_hand():
    xprime = np.array([0.0, 0.0, 0.0, 1.0 / math.sqrt(2.0)])
    np.testing.assert_allclose(geodesics.lambda_rhs(xprime, 1.0), xprime / 2.0)
    np.testing.assert_allclose(geodesics.lambda_rhs(xprime, 1.0, charts.SIGMA_PLUS), 1.5 * xprime)


@pytest.mark.parametrize("kind,a,lams", [
    (geodesics.NULL_PARABOLA, 1.0, np.linspace(0.1, 5.0, 100)),
    (geodesics.TIMELIKE_HYPERBOLA, 1.0, np.linspace(0.1, 5.0, 100)),
    (geodesics.SPACELIKE_SEMICIRCLE, math.sqrt(2.0), np.linspace(0.1, 1.3, 100)),
])
def test_closed_forms_satisfy_the_reduced_equation(kind, a, lams):
    geodesic = geodesics.closed_form_geodesic(kind, a=a)
    assert geodesics.reduced_equation_residual(geodesic, lams) <= 1e-10
    path = geodesic.sample(lams)
    assert geodesics.plane_section_residual(path) <= 1e-10
    assert max(geodesic.invariant_residual(row) for row in path.coordinates) <= 1e-12


@pytest.mark.parametrize("kind,a", [
    (geodesics.TIMELIKE_HYPERBOLA, 1.0),
    (geodesics.SPACELIKE_SEMICIRCLE, math.sqrt(2.0)),
])
def test_factorless_equations_are_not_satisfied(kind, a):
    geodesic = geodesics.closed_form_geodesic(kind, a=a)
    assert geodesics.factorless_equation_residual(geodesic, [0.5, 0.9, 1.2]) > 1e-2


def test_semicircle_parameter_domain():
    semicircle = geodesics.closed_form_geodesic(geodesics.SPACELIKE_SEMICIRCLE, a=2.0)
    semicircle.coordinates(1.9)
    with pytest.raises(geodesics.ParamDomainError):
        semicircle.coordinates(2.0)
    with pytest.raises(geodesics.ParamDomainError):
        semicircle.coordinates(0.0)


@pytest.mark.parametrize("kind,direction", [
    (geodesics.NULL_PARABOLA, [1, 0, 0, 0]),
    (geodesics.TIMELIKE_HYPERBOLA, [1, 0, 0, 1]),
    (geodesics.SPACELIKE_SEMICIRCLE, [0, 0, 0, 1]),
    ("ellipse", None),
])
def test_closed_form_rejects_mismatched_directions(kind, direction):
    with pytest.raises(geodesics.ParamDomainError):
        geodesics.closed_form_geodesic(kind, direction=direction)


def test_affine_integration_follows_the_hyperbola():
    hyperbola = geodesics.closed_form_geodesic(geodesics.TIMELIKE_HYPERBOLA, a=1.0)
    initial = geodesics.initial_state_from_closed_form(hyperbola, 1.0, 0.5)
    path = geodesics.integrate_affine(initial, 1.0, 1e-3)
    assert path.termination == geodesics.COMPLETED
    assert geodesics.speed_drift(path) <= 1e-8
    assert geodesics.plane_section_residual(path) <= 1e-7
    assert geodesics.reparameterization_residual(path) <= 1e-10
    assert max(hyperbola.invariant_residual(row) for row in path.coordinates) <= 1e-6


def test_constant_lambda_closed_form_is_affine():
    line = geodesics.closed_form_geodesic(geodesics.CONSTANT_LAMBDA_NULL, lam=2.0)
    assert line.parameterization == geodesics.AFFINE
    np.testing.assert_array_equal(line.coordinates(3.0), [3.0, 0.0, 0.0, 3.0, 2.0])
    path = line.sample(np.linspace(0.0, 10.0, 20))
    assert geodesics.speed_drift(path) == 0.0


def test_plane_section_needs_three_samples():
    parabola = geodesics.closed_form_geodesic(geodesics.NULL_PARABOLA)
    with pytest.raises(geodesics.TooFewSamplesError):
        geodesics.plane_section_residual(parabola.sample([1.0, 2.0]))


def test_diagnostics_check_the_parameterization():
    lambda_path = geodesics.integrate_lambda(np.zeros(4), NULL_DIRECTION, 1.0, 1.5, 1e-2)
    with pytest.raises(geodesics.ParamDomainError):
        geodesics.speed_drift(lambda_path)
    with pytest.raises(geodesics.ParamDomainError):
        geodesics.reparameterization_residual(lambda_path)

    affine_path = geodesics.integrate_affine(geodesics.GeodesicState(_point(), np.zeros(5)), 1.0, 0.1)
    with pytest.raises(geodesics.ParamDomainError):
        geodesics.direction_drift(affine_path)
    with pytest.raises(geodesics.ParamDomainError):
        geodesics.reparameterization_residual(affine_path)


def test_semicircle_trace_covers_both_branches():
    semicircle = geodesics.closed_form_geodesic(geodesics.SPACELIKE_SEMICIRCLE, a=2.0)
    rows = semicircle.trace(5)
    np.testing.assert_allclose(rows[0], [2, 0, 0, 0, 0], atol=1e-15)
    np.testing.assert_allclose(rows[2], [0, 0, 0, 0, 2], atol=1e-15)
    np.testing.assert_allclose(rows[-1], [-2, 0, 0, 0, 0], atol=1e-15)
    with pytest.raises(geodesics.TooFewSamplesError):
        semicircle.trace(1)
