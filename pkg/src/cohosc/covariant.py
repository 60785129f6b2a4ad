"""Covariant oscillator wavefunctions in the longitudinal/time-separation plane.

Coordinates are dimensionless oscillator units. A boost along z with
rapidity ``eta`` acts on light-cone coordinates ``u = (z+t)/sqrt2`` and
``v = (z-t)/sqrt2`` as ``u -> e^eta u``, ``v -> e^-eta v``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .special import DomainError, chi, chi_table, excitation_index

MAX_RAPIDITY = 20.0
_SQRT2 = math.sqrt(2.0)


def rapidity(eta) -> float:
    """Validate a boost parameter; ``|eta| <= 20`` keeps cosh/sinh finite."""
    eta = float(eta)
    if not math.isfinite(eta):
        raise DomainError(f"rapidity must be finite, got {eta}")
    if abs(eta) > MAX_RAPIDITY:
        raise DomainError(f"|rapidity| must not exceed {MAX_RAPIDITY}, got {eta}")
    return eta


class SpaceTimePoint(NamedTuple):
    z: float
    t: float


class LightConePoint(NamedTuple):
    u: float
    v: float


class CartesianModes3D(NamedTuple):
    a: int
    b: int
    n: int

    @property
    def total(self) -> int:
        return self.a + self.b + self.n


class MassShellParams(NamedTuple):
    m0: float
    lam: int


def beta_to_rapidity(beta: float) -> float:
    """Rapidity of velocity ``beta = v/c``: ``e^eta = sqrt((1+beta)/(1-beta))``."""
    beta = float(beta)
    if not abs(beta) < 1.0:
        raise DomainError(f"|beta| must be < 1, got {beta}")
    return math.atanh(beta)


def rapidity_to_beta(eta: float) -> float:
    return math.tanh(rapidity(eta))


def boost(p: SpaceTimePoint, eta: float) -> SpaceTimePoint:
    """Lorentz boost along z. Works elementwise if ``p`` holds arrays."""
    eta = rapidity(eta)
    ch, sh = math.cosh(eta), math.sinh(eta)
    z, t = p
    return SpaceTimePoint(ch * z + sh * t, sh * z + ch * t)


def to_lightcone(p: SpaceTimePoint) -> LightConePoint:
    z, t = p
    return LightConePoint((z + t) / _SQRT2, (z - t) / _SQRT2)


def from_lightcone(q: LightConePoint) -> SpaceTimePoint:
    u, v = q
    return SpaceTimePoint((u + v) / _SQRT2, (u - v) / _SQRT2)


def psi(n: int, eta: float, z, t):
    """Boosted covariant wavefunction psi_eta^n(z, t).

    Evaluated as the rest-frame state chi_n(z') chi_0(t') at
    ``(z', t') = boost((z, t), -eta)``. This is the normalized form; its
    Gaussian exponent is ``-(e^{-2eta}(z+t)^2 + e^{2eta}(z-t)^2) / 4``.
    """
    n = excitation_index(n)
    zr, tr = boost(SpaceTimePoint(np.asarray(z, float), np.asarray(t, float)), -eta)
    values = chi_table(n, zr)[n] * chi(0, tr)
    return values if np.ndim(values) else float(values)


def psi_rest_3d(modes: CartesianModes3D, x, y, z, t):
    """Rest-frame 3D Cartesian state with the time-separation in its ground state."""
    a, b, n = (excitation_index(m) for m in modes)
    values = chi(a, x) * chi(b, y) * chi(n, z) * chi(0, t)
    return values if np.ndim(values) else float(values)


def hadron_mass(params: MassShellParams) -> float:
    """Mass from the shell condition ``-P^2 = m0^2 + (lambda + 1)``."""
    m0, lam = params
    if m0 < 0:
        raise DomainError("bare mass must be non-negative")
    if isinstance(lam, bool) or int(lam) != lam or lam < 0:
        raise DomainError(f"total excitation must be a non-negative integer, got {lam!r}")
    return math.sqrt(m0 * m0 + lam + 1.0)


def squeeze_ellipse(eta: float, count: int = 256):
    """Unit circle in (u, v) mapped by the boost, with its semi-axes.

    Returns ``(u, v, z, t, u_axis, v_axis)`` with axes ``e^eta`` and ``e^-eta``. Every point satisfies
    ``e^{-2eta}(z+t)^2 + e^{2eta}(z-t)^2 = 2``.
    """
    eta = rapidity(eta)
    theta = 2.0 * math.pi * np.arange(count) / count
    u = math.exp(eta) * np.cos(theta)
    v = math.exp(-eta) * np.sin(theta)
    z, t = from_lightcone(LightConePoint(u, v))
    return u, v, z, t, math.exp(eta), math.exp(-eta)
