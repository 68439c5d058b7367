"""Tests for the scalar products and region classification of R^{4,2}."""

# Third-Party Libraries
import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest
# Custom Libraries
import conformal_domains.ambient as ambient
import conformal_domains.compactification as compactification

components = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
ambient_vectors = st.lists(components, min_size=6, max_size=6).map(np.array)


def test_inner_uses_the_signature():
    X = np.array([1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
    Y = np.array([1.0, 1.0, 1.0, 1.0, 1.0, 1.0])
    assert ambient.inner(X, Y) == 1.0 + 2.0 + 3.0 - 4.0 + 5.0 - 6.0


def test_quadratic_form_examples():
    assert ambient.quadratic_form([1, 1, 1, 1, 1, 1]) == 2.0
    assert ambient.quadratic_form([0, 0, 0, 1, 0, 0]) == -1.0
    assert ambient.quadratic_form([0, 0, 0, 0, 0, 0]) == 0.0


def test_minkowski_q():
    assert ambient.minkowski_q([1, 0, 0, 1]) == 0.0
    assert ambient.minkowski_q([0, 0, 0, 2]) == -4.0
    assert ambient.minkowski_inner([1, 2, 0, 1], [3, 0, 0, 2]) == 1.0


@pytest.mark.parametrize("bad", [[1, 2, 3], [1, 2, 3, 4, 5, 6, 7], [0, 0, 0, 0, 0, np.nan]])
def test_as_ambient_rejects_malformed_vectors(bad):
    with pytest.raises(ValueError):
        ambient.as_ambient(bad)


@hypothesis.seed(42)
@hypothesis.given(ambient_vectors, ambient_vectors)
def test_inner_polarizes_quadratic_form(X, Y):
    polarized = (ambient.quadratic_form(X + Y) - ambient.quadratic_form(X - Y)) / 4.0
    assert abs(polarized - ambient.inner(X, Y)) <= 1e-9 * ambient.tolerance_scale(X, Y)


@pytest.mark.parametrize("X,region", [
    ([1, 0, 0, 0, 0, 0], ambient.D_PLUS),
    ([0, 0, 0, 1, 0, 0], ambient.D_MINUS),
    ([0, 0, 0, 0, 1, 1], ambient.CONE),
    (compactification.tau_plus([1.0, 2.0, 3.0, 4.0]), ambient.CONE),
])
def test_classify(X, region):
    assert ambient.classify(X) == region


def test_classify_rejects_the_apex():
    with pytest.raises(ambient.ApexError):
        ambient.classify(np.zeros(6))


def test_normalize_to_sigma():
    normalized = ambient.normalize_to_sigma([1, 1, 1, 1, 1, 1])
    np.testing.assert_allclose(normalized, np.ones(6) / np.sqrt(2.0))
    assert ambient.quadratic_form(normalized) == pytest.approx(1.0)

    timelike = ambient.normalize_to_sigma([0, 0, 0, 3, 0, 0])
    np.testing.assert_allclose(timelike, [0, 0, 0, 1, 0, 0])


def test_normalize_to_sigma_rejects_cone_and_apex():
    with pytest.raises(ambient.OnConeError):
        ambient.normalize_to_sigma(compactification.tau_plus([1.0, 0.0, 0.0, 0.0]))
    with pytest.raises(ambient.ApexError):
        ambient.normalize_to_sigma(np.zeros(6))


@hypothesis.seed(42)
@hypothesis.given(ambient_vectors)
def test_normalize_to_sigma_lands_on_sigma(X):
    hypothesis.assume(np.max(np.abs(X)) > 1e-3)
    value = ambient.quadratic_form(X)
    hypothesis.assume(abs(value) > 1e-3)
    normalized = ambient.normalize_to_sigma(X)
    assert abs(abs(ambient.quadratic_form(normalized)) - 1.0) <= 1e-9 * ambient.tolerance_scale(normalized)
    assert ambient.ray_equivalent(normalized, X, ambient.ORIENTED)


def test_ray_equivalence_relations():
    X = np.array([1.0, -2.0, 0.5, 0.0, 3.0, 1.0])
    assert ambient.ray_equivalent(2.5 * X, X, ambient.ORIENTED)
    assert not ambient.ray_equivalent(-X, X, ambient.ORIENTED)
    assert ambient.ray_equivalent(-X, X, ambient.PROJECTIVE)
    assert not ambient.ray_equivalent(X + np.eye(6)[0], X, ambient.PROJECTIVE)


def test_ray_equivalent_rejects_unknown_relation():
    with pytest.raises(ValueError):
        ambient.ray_equivalent(np.ones(6), np.ones(6), "affine")
