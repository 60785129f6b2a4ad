"""Hermite polynomials, normalized oscillator eigenfunctions and binomial weights.

The oscillator eigenfunctions are evaluated with a normalized three-term
recurrence that carries the Gaussian factor and a running log-scale, so
orders in the hundreds or thousands neither overflow nor underflow for
moderate arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

MAX_EXCITATION = 200

_LOG_PI_QUARTER = 0.25 * math.log(math.pi)
_RESCALE = 1e100


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


def excitation_index(n) -> int:
    """Validate an oscillator quantum number and return it as ``int``."""
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"excitation index must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise DomainError(f"excitation index must be non-negative, got {n}")
    if n > MAX_EXCITATION:
        raise DomainError(f"excitation index {n} exceeds ceiling {MAX_EXCITATION}")
    return n


@dataclass(frozen=True)
class CombinatorialWeight:
    """Natural log of ``(n+k)! / (n! k!)``."""

    n: int
    k: int
    log_value: float

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) by three-term recurrence."""
    n = excitation_index(n)
    x = np.asarray(x, dtype=float)
    h_prev = np.ones_like(x)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h = 2.0 * x
    for m in range(1, n):
        h_prev, h = h, 2.0 * x * h - 2.0 * m * h_prev
    return h if h.ndim else float(h)


def chi_table(nmax: int, x) -> np.ndarray:
    """All eigenfunctions chi_0..chi_nmax at ``x``.

    Returns an array of shape ``(nmax + 1,) + np.shape(x)``. No ceiling is
    applied to ``nmax``; the squeeze expansion needs orders well past
    :data:`MAX_EXCITATION`.
    """
    if nmax < 0:
        raise DomainError("nmax must be non-negative")
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape)
    # chi_m = y_m * exp(log_scale); y is kept O(1) by periodic rescaling
    log_scale = -0.5 * x * x - _LOG_PI_QUARTER
    y_prev = np.zeros_like(x)
    y = np.ones_like(x)
    out[0] = np.exp(log_scale)
    sqrt2x = math.sqrt(2.0) * x
    for m in range(nmax):
        y_next = sqrt2x * y / math.sqrt(m + 1.0) - math.sqrt(m / (m + 1.0)) * y_prev
        y_prev, y = y, y_next
        big = np.abs(y) > _RESCALE
        if np.any(big):
            s = np.where(big, np.abs(y), 1.0)
            y = y / s
            y_prev = y_prev / s
            log_scale = log_scale + np.log(s)
        out[m + 1] = y * np.exp(log_scale)
    return out


def chi(n: int, x):
    """Normalized oscillator eigenfunction chi_n(x) = N_n H_n(x) exp(-x^2/2)."""
    n = excitation_index(n)
    values = chi_table(n, x)[n]
    return values if values.ndim else float(values)


def weighted_sum(weights, table) -> np.ndarray:
    """sum_k weights[k] * table[k], accumulated in k order.

    A fixed sequential order makes every point's value independent of the
    shape of the array it was evaluated in.
    """
    acc = np.zeros(table.shape[1:])
    for w, row in zip(weights, table):
        acc += w * row
    return acc


def log_binomial(n, k):
    """ln[(n+k)!/(n! k!)] for array-like ``k`` (vectorized helper)."""
    k = np.asarray(k, dtype=float)
    return gammaln(n + k + 1.0) - gammaln(n + 1.0) - gammaln(k + 1.0)


def log_binomial_weight(n: int, k: int) -> CombinatorialWeight:
    n = excitation_index(n)
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    k = int(k)
    if n == 0 or k == 0:
        return CombinatorialWeight(n, k, 0.0)
    return CombinatorialWeight(n, k, float(log_binomial(n, k)))
