"""Density matrices, purity and entropy after tracing out the time separation.

Tracing psi_eta^n(z, t) over t leaves a mixed state in z that is diagonal
in the oscillator basis:

    rho(z, z') = sum_k p_k chi_{n+k}(z) chi_{n+k}(z'),
    p_k = sech(eta)^(2(n+1)) (n+k)!/(n! k!) tanh(eta)^(2k).

Entropies are in nats; temperatures are in units of the oscillator quantum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .covariant import beta_to_rapidity, psi, rapidity
from .special import chi_table, excitation_index, log_binomial, weighted_sum
from .squeeze import DEFAULT_TOL, series_length

# Below this |eta| the sinh^2 ln sinh term is taken as its limit, 0.
SMALL_ETA = 1e-8


@dataclass(frozen=True)
class SchmidtSpectrum:
    n: int
    eta: float
    probs: np.ndarray
    truncation_tail: float

    @property
    def k(self) -> np.ndarray:
        return np.arange(len(self.probs))


@dataclass(frozen=True)
class EntropyReport:
    n: int
    eta: float
    entropy_analytic: float
    entropy_spectral: float
    purity_analytic: float
    purity_spectral: float
    effective_temperature: float | None = None


def _log_probs(n: int, eta: float, k: np.ndarray) -> np.ndarray:
    return (
        -2.0 * (n + 1) * math.log(math.cosh(eta))
        + log_binomial(n, k)
        + 2.0 * k * math.log(abs(math.tanh(eta)))
    )


def schmidt_spectrum(n: int, eta: float, *, tol: float = DEFAULT_TOL) -> SchmidtSpectrum:
    """Probabilities p_k of the product-state expansion, truncated by ``tol``."""
    n = excitation_index(n)
    eta = rapidity(eta)
    if eta == 0.0:
        return SchmidtSpectrum(n, eta, np.array([1.0]), 0.0)
    size = series_length(n, eta, power=2, tol=tol)
    probs = np.exp(_log_probs(n, eta, np.arange(size, dtype=float)))
    # ratios p_{k+1}/p_k decrease past the mode, so the tail is dominated
    # by a geometric series with the last kept ratio
    q = math.tanh(eta) ** 2
    ratio = (n + size) / size * q
    tail = probs[-1] * ratio / (1.0 - ratio)
    return SchmidtSpectrum(n, eta, probs, float(tail))


def pure_density(n: int, eta: float, z, t, z_prime, t_prime):
    """Pure-state density matrix psi(z, t) psi(z', t')."""
    return psi(n, eta, z, t) * psi(n, eta, z_prime, t_prime)


def reduced_density(n: int, eta: float, z, z_prime, *, tol: float = DEFAULT_TOL):
    """Density matrix in z after integrating out t, summed in the oscillator basis."""
    spec = schmidt_spectrum(n, eta, tol=tol)
    top = n + len(spec.probs) - 1
    z = np.asarray(z, float)
    z_prime = np.asarray(z_prime, float)
    left = chi_table(top, z)[n:]
    right = chi_table(top, z_prime)[n:]
    values = weighted_sum(spec.probs, left * right)
    return values if np.ndim(values) else float(values)


def ground_reduced_density(eta: float, z, z_prime):
    """Closed-form reduced density matrix of the boosted ground state."""
    c = math.cosh(2.0 * rapidity(eta))
    z = np.asarray(z, float)
    z_prime = np.asarray(z_prime, float)
    values = math.sqrt(1.0 / (math.pi * c)) * np.exp(
        -0.25 * ((z + z_prime) ** 2 / c + (z - z_prime) ** 2 * c)
    )
    return values if values.ndim else float(values)


def purity(n: int, eta: float, *, tol: float = DEFAULT_TOL) -> float:
    """Tr rho^2 from the squared-binomial series in tanh(eta)^4."""
    n = excitation_index(n)
    eta = rapidity(eta)
    if eta == 0.0:
        return 1.0
    size = series_length(n, eta, power=4, tol=tol)
    k = np.arange(size, dtype=float)
    log_terms = (
        -4.0 * (n + 1) * math.log(math.cosh(eta))
        + 2.0 * log_binomial(n, k)
        + 4.0 * k * math.log(abs(math.tanh(eta)))
    )
    return float(np.exp(log_terms).sum())


def ground_purity(eta: float) -> float:
    return 1.0 / math.cosh(2.0 * rapidity(eta))


def _boost_entropy_term(eta: float) -> float:
    """cosh^2 ln cosh - sinh^2 ln sinh for eta > 0."""
    eta = abs(eta)
    ch, sh = math.cosh(eta), math.sinh(eta)
    return ch * ch * math.log(ch) - sh * sh * math.log(sh)


def _binomial_entropy_sum(n: int, eta: float, tol: float) -> float:
    """sum_k p_k ln[(n+k)!/(n! k!)]; identically 0 for n = 0."""
    if n == 0 or eta == 0.0:
        return 0.0
    spec = schmidt_spectrum(n, eta, tol=tol)
    return float(np.dot(spec.probs, log_binomial(n, spec.k.astype(float))))


def entropy(n: int, eta: float, *, tol: float = DEFAULT_TOL) -> float:
    """Von Neumann entropy of the reduced density matrix, closed form in eta.

    Below ``|eta| < SMALL_ETA`` the result is taken as its limit, 0.
    """
    n = excitation_index(n)
    eta = rapidity(eta)
    if abs(eta) < SMALL_ETA:
        return 0.0
    return 2.0 * (n + 1) * _boost_entropy_term(eta) - _binomial_entropy_sum(n, eta, tol)


def entropy_velocity(n: int, beta: float, *, tol: float = DEFAULT_TOL) -> float:
    """The same entropy written in terms of the velocity ``beta = v/c``.

    The series prefactor is ``(1 - beta^2)^(n+1)``, i.e. sech(eta)^(2(n+1)).
    """
    n = excitation_index(n)
    eta = beta_to_rapidity(beta)
    if abs(beta) < SMALL_ETA:
        return 0.0
    b2 = beta * beta
    first = -(n + 1) * (math.log1p(-b2) + b2 * math.log(b2) / (1.0 - b2))
    if n == 0:
        return first
    size = series_length(n, eta, power=2, tol=tol)
    k = np.arange(size, dtype=float)
    log_c = log_binomial(n, k)
    terms = np.exp((n + 1) * math.log1p(-b2) + log_c + k * math.log(b2))
    return first - float(np.dot(terms, log_c))


def spectral_entropy_of(spec: SchmidtSpectrum) -> float:
    p = spec.probs[spec.probs > 0]
    return float(-np.dot(p, np.log(p)))


def quark_distribution(eta: float, z):
    """Diagonal rho(z, z) of the boosted ground state."""
    return ground_reduced_density(eta, z, z)


def quark_width(eta: float) -> float:
    """Standard deviation of :func:`quark_distribution`, sqrt(cosh(2 eta)/2)."""
    return math.sqrt(math.cosh(2.0 * rapidity(eta)) / 2.0)


def quoted_quark_width(eta: float) -> float:
    """The width sqrt(cosh eta) quoted alongside the computed one."""
    return math.sqrt(math.cosh(rapidity(eta)))


def momentum_distribution(eta: float, q):
    """Momentum-space diagonal of the boosted ground state's reduced density.

    The closed-form kernel is symmetric under z <-> q, so the momentum
    distribution has the same Gaussian form as the position one.
    """
    return ground_reduced_density(eta, q, q)


def uncertainty_product(eta: float) -> float:
    """Delta z * Delta q = cosh(2 eta)/2 for the boosted ground state."""
    return math.cosh(2.0 * rapidity(eta)) / 2.0


def quoted_uncertainty_product(eta: float) -> float:
    return math.cosh(rapidity(eta))


def effective_temperature(eta: float) -> float:
    """Temperature T with tanh(eta)^2 = exp(-1/T); 0 at eta = 0 by convention."""
    eta = abs(rapidity(eta))
    if eta == 0.0:
        return 0.0
    th = math.tanh(eta)
    if th == 1.0:
        return math.inf
    return -1.0 / (2.0 * math.log(th))


def entropy_report(n: int, eta: float, *, tol: float = DEFAULT_TOL) -> EntropyReport:
    spec = schmidt_spectrum(n, eta, tol=tol)
    return EntropyReport(
        n=spec.n,
        eta=spec.eta,
        entropy_analytic=entropy(n, eta, tol=tol),
        entropy_spectral=spectral_entropy_of(spec),
        purity_analytic=purity(n, eta, tol=tol),
        purity_spectral=float(np.dot(spec.probs, spec.probs)),
        effective_temperature=effective_temperature(eta) if spec.n == 0 else None,
    )
