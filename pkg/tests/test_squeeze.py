import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohosc.covariant import psi
from cohosc.special import DomainError, chi, chi_table
from cohosc.squeeze import (
    TruncationError,
    TwoModePoint,
    from_normal,
    reconstruct,
    rest_state,
    series_length,
    squeeze_coefficient,
    squeeze_coefficients,
    squeeze_map,
    squeezed_state,
    to_normal,
)

# 2D Gauss-Hermite (96 nodes) overlap <chi_3 chi_2 | squeezed_state(1, 1.0)>
OVERLAP_1_2_ETA1 = 0.42192046492297475


def test_to_normal_examples():
    assert to_normal(TwoModePoint(1.0, 1.0)) == pytest.approx((math.sqrt(2), 0.0), abs=1e-15)
    assert to_normal(TwoModePoint(1.0, -1.0)) == pytest.approx((0.0, math.sqrt(2)), abs=1e-15)


@given(st.floats(-50, 50), st.floats(-50, 50))
def test_to_normal_is_orthogonal(x1, x2):
    y1, y2 = to_normal(TwoModePoint(x1, x2))
    assert abs(y1 * y1 + y2 * y2 - (x1 * x1 + x2 * x2)) <= 1e-15 * max(1.0, x1 * x1 + x2 * x2) * 4
    assert from_normal((y1, y2)) == pytest.approx((x1, x2), abs=1e-13)


def test_squeezed_state_examples():
    assert squeezed_state(0, 0.0, 0.0, 0.0) == pytest.approx(1 / math.sqrt(math.pi), abs=1e-15)
    for x1 in (-1.5, 0.0, 0.8, 2.4):
        assert squeezed_state(1, 0.0, x1, 0.0) == pytest.approx(chi(1, x1) * chi(0, 0.0), abs=1e-15)


@pytest.mark.parametrize("n", [0, 1, 4, 9])
@pytest.mark.parametrize("eta", [-1.2, 0.0, 0.5, 1.5, 3.0])
def test_squeezed_state_is_boosted_oscillator(n, eta, grid21):
    x1, x2 = grid21
    assert np.abs(squeezed_state(n, eta, x1, x2) - psi(n, eta, x1, x2)).max() <= 1e-14


@pytest.mark.parametrize("n", [0, 2, 5])
@pytest.mark.parametrize("eta", [-0.8, 0.4, 1.5])
def test_hyperbolic_map_of_rest_state(n, eta, grid21):
    x1, x2 = grid21
    mapped = rest_state(n, *squeeze_map(TwoModePoint(x1, x2), -eta))
    assert np.abs(mapped - squeezed_state(n, eta, x1, x2)).max() <= 1e-12


def test_coefficient_examples():
    for n in (0, 3, 7):
        assert squeeze_coefficient(n, 0, 0.0) == 1.0
        assert squeeze_coefficient(n, 4, 0.0) == 0.0
    for eta in (0.3, 1.0, -0.6):
        for k in range(6):
            expected = math.tanh(eta) ** k / math.cosh(eta)
            assert squeeze_coefficient(0, k, eta) == pytest.approx(expected, rel=1e-13)
    assert squeeze_coefficient(1, 2, 1.0) == pytest.approx(OVERLAP_1_2_ETA1, abs=1e-12)


@given(st.integers(0, 10), st.integers(0, 60), st.floats(-3, 3))
def test_coefficient_bounded_with_sign(n, k, eta):
    c = squeeze_coefficient(n, k, eta)
    assert abs(c) <= 1.0
    if c != 0.0 and k % 2 == 1:
        assert math.copysign(1.0, c) == math.copysign(1.0, eta)


@pytest.mark.parametrize("n", [0, 1, 5, 10])
@pytest.mark.parametrize("eta", [-3.0, -0.4, 0.0, 1.0, 2.2, 3.0])
def test_completeness(n, eta):
    c = squeeze_coefficients(n, eta)
    assert abs(float(np.dot(c, c)) - 1.0) <= 1e-12


def test_coefficients_vector_matches_scalar():
    c = squeeze_coefficients(3, -0.9, 30)
    assert c == pytest.approx([squeeze_coefficient(3, k, -0.9) for k in range(31)], rel=1e-14)


def test_coefficient_overlap_identity(gh96):
    a, b = np.meshgrid(gh96.nodes, gh96.nodes, indexing="ij")
    w = np.outer(gh96.plain_weights, gh96.plain_weights)
    table = chi_table(13, gh96.nodes)
    for n in range(6):
        for eta in (-1.5, -0.3, 0.0, 0.7, 1.5):
            state = squeezed_state(n, eta, a, b) * w
            for k in range(9):
                overlap = table[n + k] @ state @ table[k]
                assert abs(overlap - squeeze_coefficient(n, k, eta)) <= 1e-8, (n, eta, k)


def test_reconstruct_examples():
    for x1, x2 in [(0.0, 0.0), (1.2, -0.4)]:
        assert reconstruct(0, 0.0, x1, x2, kmax=0) == chi(0, x1) * chi(0, x2)
    exact = squeezed_state(0, 1.0, 0.5, 0.5)
    th = math.tanh(1.0)
    tail = th ** 61 / (math.cosh(1.0) * (1.0 - th) * math.sqrt(math.pi))
    assert abs(reconstruct(0, 1.0, 0.5, 0.5, kmax=60) - exact) <= tail
    assert reconstruct(0, 1.0, 0.5, 0.5, kmax=100) == pytest.approx(exact, abs=1e-10)
    assert reconstruct(0, 1.0, 0.5, 0.5) == pytest.approx(exact, abs=1e-14)


def test_reconstruct_tail_bound():
    # |chi_k| <= pi^(-1/4) bounds the tail of a geometric series in tanh(eta)
    eta, x1, x2 = 1.0, 0.3, -0.6
    th = math.tanh(eta)
    exact = squeezed_state(0, eta, x1, x2)
    bound_const = th / (math.cosh(eta) * (1.0 - th) * math.sqrt(math.pi))
    for kmax in range(0, 80, 5):
        err = abs(reconstruct(0, eta, x1, x2, kmax=kmax) - exact)
        assert err <= bound_const * th ** kmax


def test_reconstruct_converges_geometrically_for_excited_state():
    eta, x1, x2 = 0.8, -0.5, 1.1
    exact = squeezed_state(2, eta, x1, x2)
    errors = np.array([abs(reconstruct(2, eta, x1, x2, kmax=k) - exact) for k in range(40, 121, 20)])
    scaled = errors / np.tanh(eta) ** np.arange(40, 121, 20)
    c = scaled.max()
    assert np.all(errors <= c * np.tanh(eta) ** np.arange(40, 121, 20))
    assert errors[-1] < 1e-9 and errors[-1] < errors[0] * 1e-3


def test_reconstruct_grid_matches_pointwise(grid21):
    x1, x2 = grid21
    grid = reconstruct(2, 0.9, x1, x2)
    for i, j in [(0, 0), (3, 17), (10, 10), (20, 5)]:
        assert grid[i, j] == reconstruct(2, 0.9, x1[i, j], x2[i, j])


def test_series_length_rules():
    assert series_length(4, 0.0) == 1
    with pytest.raises(TruncationError):
        series_length(0, 20.0)
    with pytest.raises(TruncationError):
        series_length(3, 2.0, cap=50)


def test_negative_k_rejected():
    with pytest.raises(DomainError):
        squeeze_coefficient(0, -1, 0.5)
