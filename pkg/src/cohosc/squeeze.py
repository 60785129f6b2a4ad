"""Two-mode squeezed oscillator states and their product-state expansion.

The squeezed n-photon state expands as

    psi_eta^n(x1, x2) = sum_k c_k chi_{n+k}(x1) chi_k(x2),
    c_k = sech(eta)^(n+1) sqrt((n+k)!/(n! k!)) tanh(eta)^k,

which is a negative-binomial series in ``tanh(eta)^2``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .covariant import rapidity
from .special import DomainError, chi, chi_table, excitation_index, log_binomial, weighted_sum

MAX_TERMS = 100_000
DEFAULT_TOL = 1e-16
_SQRT2 = math.sqrt(2.0)


class TruncationError(DomainError):
    """The k-series did not reach the requested tail within ``MAX_TERMS``."""


class TwoModePoint(NamedTuple):
    x1: float
    x2: float


class NormalCoords(NamedTuple):
    y1: float
    y2: float


def to_normal(p: TwoModePoint) -> NormalCoords:
    x1, x2 = p
    return NormalCoords((x1 + x2) / _SQRT2, (x1 - x2) / _SQRT2)


def from_normal(q: NormalCoords) -> TwoModePoint:
    y1, y2 = q
    return TwoModePoint((y1 + y2) / _SQRT2, (y1 - y2) / _SQRT2)


def squeeze_map(p: TwoModePoint, eta: float) -> TwoModePoint:
    """Hyperbolic coordinate map x1 -> ch x1 + sh x2, x2 -> sh x1 + ch x2."""
    eta = rapidity(eta)
    ch, sh = math.cosh(eta), math.sinh(eta)
    x1, x2 = p
    return TwoModePoint(ch * x1 + sh * x2, sh * x1 + ch * x2)


def rest_state(n: int, x1, x2):
    """Unsqueezed product state chi_n(x1) chi_0(x2)."""
    values = chi(n, x1) * chi(0, x2)
    return values if np.ndim(values) else float(values)


def squeezed_state(n: int, eta: float, x1, x2):
    """Squeezed n-photon wavefunction, evaluated in normal coordinates.

    With ``y = to_normal(x)`` the state is ``chi_n(a) chi_0(b)`` where
    ``a = (e^-eta y1 + e^eta y2)/sqrt2`` and ``b = (e^-eta y1 - e^eta y2)/sqrt2``.
    """
    n = excitation_index(n)
    eta = rapidity(eta)
    y1, y2 = to_normal(TwoModePoint(np.asarray(x1, float), np.asarray(x2, float)))
    s1 = math.exp(-eta) * y1
    s2 = math.exp(eta) * y2
    values = chi_table(n, (s1 + s2) / _SQRT2)[n] * chi(0, (s1 - s2) / _SQRT2)
    return values if np.ndim(values) else float(values)


def _log_terms(n: int, eta: float, k: np.ndarray) -> np.ndarray:
    """ln|c_k| for the expansion coefficients."""
    log_sech = -math.log(math.cosh(eta))
    log_tanh = math.log(abs(math.tanh(eta)))
    return (n + 1) * log_sech + 0.5 * log_binomial(n, k) + k * log_tanh


def series_length(
    n: int, eta: float, *, power: int = 2, tol: float = DEFAULT_TOL, cap: int = MAX_TERMS
) -> int:
    """Number of leading k-terms to keep.

    Terms are ``|c_k|**power``. Past the mode the term ratio ``r_k`` decreases
    in k, so everything after term k is bounded by ``t_k r_k / (1 - r_k)``;
    the series stops at the first k where that bound is below ``tol`` times
    the running sum.
    """
    n = excitation_index(n)
    eta = rapidity(eta)
    q = math.tanh(eta) ** 2
    if q == 0.0:
        return 1
    if q >= 1.0:
        raise TruncationError(f"tanh(eta)^2 rounds to 1 at eta={eta}; series does not converge")
    mean = (n + 1) * q / (1.0 - q)
    sd = math.sqrt((n + 1) * q) / (1.0 - q)
    size = min(cap, int(mean + 20.0 * sd) + 32)
    while True:
        k = np.arange(size, dtype=float)
        logt = power * _log_terms(n, eta, k)
        terms = np.exp(logt - logt.max())
        running = np.cumsum(terms)
        ratio = ((n + k + 1.0) / (k + 1.0) * q) ** (0.5 * power)
        past_mode = ratio < 1.0
        tail = terms * ratio / np.where(past_mode, 1.0 - ratio, 1.0)
        stop = past_mode & (tail < tol * running)
        if stop.any():
            return int(np.argmax(stop)) + 1
        if size >= cap:
            raise TruncationError(
                f"series for n={n}, eta={eta} needs more than {cap} terms"
            )
        size = min(cap, 2 * size)


def squeeze_coefficients(n: int, eta: float, kmax: int | None = None, *, tol: float = DEFAULT_TOL):
    """Coefficients c_0..c_kmax; ``kmax=None`` chooses it by the amplitude rule."""
    n = excitation_index(n)
    eta = rapidity(eta)
    if kmax is None:
        kmax = series_length(n, eta, power=1, tol=tol) - 1
    k = np.arange(kmax + 1, dtype=float)
    if eta == 0.0:
        out = np.zeros(kmax + 1)
        out[0] = 1.0
        return out
    values = np.exp(_log_terms(n, eta, k))
    if eta < 0:
        values = values * np.where(k % 2 == 1, -1.0, 1.0)
    return values


def squeeze_coefficient(n: int, k: int, eta: float) -> float:
    """Expansion coefficient of chi_{n+k}(x1) chi_k(x2) in the squeezed state."""
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    k = int(k)
    n = excitation_index(n)
    eta = rapidity(eta)
    if eta == 0.0:
        return 1.0 if k == 0 else 0.0
    value = math.exp(float(_log_terms(n, eta, np.array(float(k)))))
    return -value if (eta < 0 and k % 2) else value


def reconstruct(n: int, eta: float, x1, x2, kmax: int | None = None, *, tol: float = DEFAULT_TOL):
    """Partial sum of the product-state expansion through ``kmax``."""
    n = excitation_index(n)
    coeffs = squeeze_coefficients(n, eta, kmax, tol=tol)
    kmax = len(coeffs) - 1
    x1 = np.asarray(x1, float)
    x2 = np.asarray(x2, float)
    first = chi_table(n + kmax, x1)[n:]
    second = chi_table(kmax, x2)
    values = weighted_sum(coeffs, first * second)
    return values if np.ndim(values) else float(values)
