"""Brute-force numerics used to cross-check the closed forms.

Gauss-Hermite quadrature, the partial trace done by direct integration
over t, spectral decomposition of the discretized density kernel, and
finite-difference residuals of the oscillator Hamiltonians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .covariant import psi, rapidity
from .special import DomainError, chi, chi_table, excitation_index

GAUSS_HERMITE = "gauss-hermite-physicists"
TRAPEZOID = "uniform-trapezoid"
MAX_NODES = 512
NEGATIVE_CLAMP = -1e-12


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes with two weight sets.

    ``weights`` integrate against the rule's own weight function (e^{-x^2}
    for Gauss-Hermite, 1 for trapezoid); ``plain_weights`` integrate f(x) dx.
    For Gauss-Hermite the plain weights are w_i e^{x_i^2}, computed from the
    Christoffel function so they stay finite when w_i underflows.
    """

    nodes: np.ndarray
    weights: np.ndarray
    plain_weights: np.ndarray
    kind: str

    def __len__(self) -> int:
        return len(self.nodes)

    def integrate(self, values) -> float:
        """Sum of ``plain_weights * values`` over the last axis."""
        return np.asarray(values) @ self.plain_weights


def gauss_hermite(m: int) -> QuadratureRule:
    """m-point Gauss-Hermite rule for the weight e^{-x^2}.

    Golub-Welsch eigen-solve of the Jacobi matrix, then Newton polishing of
    the roots of chi_m.
    """
    if isinstance(m, bool) or int(m) != m or not 1 <= m <= MAX_NODES:
        raise DomainError(f"node count must be an integer in [1, {MAX_NODES}], got {m!r}")
    m = int(m)
    if m == 1:
        root_pi = math.sqrt(math.pi)
        return QuadratureRule(np.zeros(1), np.array([root_pi]), np.array([root_pi]), GAUSS_HERMITE)
    offdiag = np.sqrt(np.arange(1, m) / 2.0)
    x = eigh_tridiagonal(np.zeros(m), offdiag, eigvals_only=True)
    for _ in range(3):
        table = chi_table(m, x)
        deriv = math.sqrt(2.0 * m) * table[m - 1] - x * table[m]
        x = x - table[m] / deriv
    x = np.sort(x)
    x = 0.5 * (x - x[::-1])
    plain = 1.0 / np.sum(chi_table(m - 1, x) ** 2, axis=0)
    plain = 0.5 * (plain + plain[::-1])
    return QuadratureRule(x, plain * np.exp(-x * x), plain, GAUSS_HERMITE)


def trapezoid_rule(start: float = -8.0, stop: float = 8.0, step: float = 1e-3) -> QuadratureRule:
    count = int(round((stop - start) / step)) + 1
    x = np.linspace(start, stop, count)
    h = (stop - start) / (count - 1)
    w = np.full(count, h)
    w[0] = w[-1] = 0.5 * h
    return QuadratureRule(x, w, w, TRAPEZOID)


@dataclass(frozen=True, eq=False)
class DensityKernel:
    """Reduced density matrix sampled at the nodes of ``grid``."""

    grid: QuadratureRule
    values: np.ndarray
    n: int
    eta: float

    def weighted(self) -> np.ndarray:
        """Symmetric form sqrt(w_i) K_ij sqrt(w_j) whose eigenvalues are the p_k."""
        s = np.sqrt(self.grid.plain_weights)
        return s[:, None] * self.values * s[None, :]

    def trace(self) -> float:
        return float(np.dot(self.grid.plain_weights, np.diag(self.values)))


def partial_trace_values(n: int, eta: float, z, z_prime, t_rule: QuadratureRule) -> np.ndarray:
    """Matrix of int psi(z_i, t) psi(z'_j, t) dt over the nodes of ``t_rule``."""
    t = t_rule.nodes
    z = np.atleast_1d(np.asarray(z, float))
    z_prime = np.atleast_1d(np.asarray(z_prime, float))
    left = psi(n, eta, z[:, None], t[None, :])
    right = left if z_prime is z else psi(n, eta, z_prime[:, None], t[None, :])
    return (left * t_rule.plain_weights) @ right.T


def default_t_rule(grid: QuadratureRule) -> QuadratureRule:
    """Time-separation rule used when none is given: Gauss-Hermite at 4x the z nodes."""
    return gauss_hermite(min(MAX_NODES, 4 * len(grid)))


def numeric_partial_trace(
    n: int, eta: float, grid: QuadratureRule, t_rule: QuadratureRule | None = None
) -> DensityKernel:
    n = excitation_index(n)
    eta = rapidity(eta)
    if t_rule is None:
        t_rule = default_t_rule(grid)
    values = partial_trace_values(n, eta, grid.nodes, grid.nodes, t_rule)
    values = 0.5 * (values + values.T)
    return DensityKernel(grid, values, n, eta)


def kernel_spectrum(kernel: DensityKernel, count: int | None = None) -> np.ndarray:
    """Leading eigenvalues of the weighted kernel, descending."""
    size = len(kernel.grid)
    if count is None:
        count = size
    if not 0 < count <= size:
        raise DomainError(f"count must be in [1, {size}], got {count}")
    eig = np.linalg.eigvalsh(kernel.weighted())[::-1][:count]
    return np.where((eig < 0) & (eig >= NEGATIVE_CLAMP), 0.0, eig)


def spectral_entropy(spectrum) -> float:
    """-sum lambda ln lambda over the positive entries."""
    lam = np.asarray(spectrum, float)
    if np.any(lam < NEGATIVE_CLAMP):
        raise DomainError(f"spectrum has an entry below {NEGATIVE_CLAMP}: {lam.min()}")
    lam = lam[lam > 0]
    return float(-np.dot(lam, np.log(lam)))


def _check_step(step: float) -> float:
    if not 1e-4 <= step <= 1e-2:
        raise DomainError(f"finite-difference step must lie in [1e-4, 1e-2], got {step}")
    return float(step)


def _sample_box(half_width: float, samples: int):
    axis = np.linspace(-half_width, half_width, samples)
    return np.meshgrid(axis, axis, indexing="ij")


def _oscillator_parts(f, a, b, h):
    """(-d2/da2 + a^2) f and (-d2/db2 + b^2) f by central differences."""
    f0 = f(a, b)
    d_aa = (f(a + h, b) - 2.0 * f0 + f(a - h, b)) / (h * h)
    d_bb = (f(a, b + h) - 2.0 * f0 + f(a, b - h)) / (h * h)
    return f0, -d_aa + a * a * f0, -d_bb + b * b * f0


def hminus_residual(
    n: int, eta: float, half_width: float = 3.0, step: float = 1e-3, samples: int = 61
) -> float:
    """max |H_- psi - n psi| / max |psi| over the box |z|, |t| <= half_width."""
    n = excitation_index(n)
    eta = rapidity(eta)
    h = _check_step(step)
    z, t = _sample_box(half_width, samples)
    f0, hz, ht = _oscillator_parts(lambda a, b: psi(n, eta, a, b), z, t, h)
    residual = 0.5 * (hz - ht) - n * f0
    return float(np.abs(residual).max() / np.abs(f0).max())


def hplus_residual(
    n1: int, n2: int, half_width: float = 3.0, step: float = 1e-3, samples: int = 61
) -> float:
    """max |H_+ f - (n1+n2+1) f| / max |f| for f = chi_n1(x1) chi_n2(x2)."""
    n1 = excitation_index(n1)
    n2 = excitation_index(n2)
    h = _check_step(step)
    x1, x2 = _sample_box(half_width, samples)
    f0, h1, h2 = _oscillator_parts(lambda a, b: chi(n1, a) * chi(n2, b), x1, x2, h)
    residual = 0.5 * (h1 + h2) - (n1 + n2 + 1) * f0
    return float(np.abs(residual).max() / np.abs(f0).max())
