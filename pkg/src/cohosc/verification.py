"""Oracle suites behind ``cohosc verify``.

Each suite returns a list of :class:`Check` records comparing a closed form
with an independent numerical route. A check passes when its measured
``value`` does not exceed its ``tolerance``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma

from . import covariant as cv
from . import density as de
from . import oracle as orc
from . import squeeze as sq
from .special import chi_table

ETAS = (0.3, 0.7, 1.0, 1.5)
MODES = (0, 1, 2, 3)
SUITES = ("quadrature", "expansion", "density", "entropy", "operators")


@dataclass
class Check:
    check: str
    target: str
    value: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.tolerance)

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "target": self.target,
            "value": self.value,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def _grid21():
    axis = np.linspace(-3.0, 3.0, 21)
    return np.meshgrid(axis, axis, indexing="ij")


def quadrature_checks() -> list[Check]:
    out = []
    one = orc.gauss_hermite(1)
    out.append(Check("gh_one_node", "node 0, weight sqrt(pi)",
                     float(abs(one.nodes[0]) + abs(one.weights[0] - math.sqrt(math.pi))), 1e-15))
    two = orc.gauss_hermite(2)
    err = max(np.abs(two.nodes - np.array([-1, 1]) / math.sqrt(2)).max(),
              np.abs(two.weights - math.sqrt(math.pi) / 2).max())
    out.append(Check("gh_two_nodes", "+-1/sqrt2, sqrt(pi)/2", float(err), 1e-14))

    worst = 0.0
    for m in (2, 4, 8, 16, 32, 64, 128):
        rule = orc.gauss_hermite(m)
        for j in range(m):
            exact = gamma(j + 0.5)
            approx = float(np.dot(rule.weights, rule.nodes ** (2 * j)))
            worst = max(worst, abs(approx - exact) / exact)
    out.append(Check("gh_even_moments", "Gamma(j+1/2) for 2j <= 2m-1", worst, 1e-12))

    worst = 0.0
    for m in (3, 17, 64, 128, 150):
        rule = orc.gauss_hermite(m)
        x, w = np.polynomial.hermite.hermgauss(m)
        worst = max(worst, np.abs(rule.nodes - x).max(), np.abs(rule.weights - w).max() / w.max())
    out.append(Check("gh_vs_numpy", "numpy hermgauss", float(worst), 1e-13))

    rule = orc.gauss_hermite(128)
    table = chi_table(20, rule.nodes)
    gram = (table * rule.plain_weights) @ table.T
    out.append(Check("chi_orthonormality", "identity, m,n <= 20",
                     float(np.abs(gram - np.eye(21)).max()), 1e-10))
    return out


def expansion_checks() -> list[Check]:
    out = []
    x1, x2 = _grid21()
    worst = 0.0
    for n in MODES:
        for eta in ETAS:
            diff = sq.reconstruct(n, eta, x1, x2) - sq.squeezed_state(n, eta, x1, x2)
            worst = max(worst, float(np.abs(diff).max()))
    out.append(Check("expansion_identity", "squeezed_state on 21x21 grid", worst, 1e-9))

    rule = orc.gauss_hermite(96)
    a, b = np.meshgrid(rule.nodes, rule.nodes, indexing="ij")
    w2 = np.outer(rule.plain_weights, rule.plain_weights)
    table = chi_table(3 + 8, rule.nodes)
    worst = 0.0
    for n in MODES:
        for eta in (0.0, -0.7) + ETAS:
            state = sq.squeezed_state(n, eta, a, b) * w2
            for k in range(9):
                overlap = table[n + k] @ state @ table[k]
                worst = max(worst, abs(overlap - sq.squeeze_coefficient(n, k, eta)))
    out.append(Check("coefficient_overlap", "2D Gauss-Hermite overlap, 96 nodes", float(worst), 1e-8))

    worst = 0.0
    for n in range(11):
        for eta in (-3.0, -1.0, 0.5, 1.5, 3.0):
            c = sq.squeeze_coefficients(n, eta)
            worst = max(worst, abs(float(np.dot(c, c)) - 1.0))
    out.append(Check("completeness", "sum c_k^2 = 1, n <= 10, |eta| <= 3", worst, 1e-12))

    worst = 0.0
    for n in MODES:
        for eta in ETAS:
            direct = sq.squeezed_state(n, eta, x1, x2)
            mapped = sq.rest_state(n, *sq.squeeze_map(sq.TwoModePoint(x1, x2), -eta))
            boosted = cv.psi(n, eta, x1, x2)
            worst = max(worst, float(np.abs(direct - mapped).max()), float(np.abs(direct - boosted).max()))
    out.append(Check("squeeze_is_boost", "rest state under hyperbolic map; psi(z,t)", worst, 1e-12))
    return out


def _uv_invariance(samples: int = 10_000, seed: int = 20260101) -> float:
    rng = np.random.default_rng(seed)
    z, t = rng.uniform(-5.0, 5.0, size=(2, samples))
    etas = rng.uniform(-2.0, 2.0, size=samples)
    worst = 0.0
    for zi, ti, eta in zip(z, t, etas):
        u, v = cv.to_lightcone(cv.SpaceTimePoint(zi, ti))
        u2, v2 = cv.to_lightcone(cv.boost(cv.SpaceTimePoint(zi, ti), eta))
        worst = max(worst, abs(u2 * v2 - u * v))
    return float(worst)


def density_checks() -> list[Check]:
    out = []
    rule = orc.gauss_hermite(96)
    z = rule.nodes
    worst = 0.0
    for n in MODES:
        for eta in (0.0, -0.7) + ETAS:
            kernel = orc.numeric_partial_trace(n, eta, rule)
            analytic = de.reduced_density(n, eta, z[:, None], z[None, :])
            worst = max(worst, float(np.abs(kernel.values - analytic).max()))
    out.append(Check("partial_trace", "numeric t-integration, 96-node grid", worst, 1e-8))

    zz = np.linspace(-6.0, 6.0, 41)
    worst = 0.0
    for eta in (0.0,) + ETAS:
        series = de.reduced_density(0, eta, zz[:, None], zz[None, :])
        closed = de.ground_reduced_density(eta, zz[:, None], zz[None, :])
        worst = max(worst, float(np.abs(series - closed).max()))
    out.append(Check("ground_closed_form", "Gaussian kernel of the boosted ground state", worst, 1e-12))

    worst_series = worst_ground = 0.0
    highest = 0.0
    for n in MODES:
        for eta in ETAS + (-1.0, 2.0):
            p = de.schmidt_spectrum(n, eta).probs
            value = de.purity(n, eta)
            worst_series = max(worst_series, abs(value - float(np.dot(p, p))))
            highest = max(highest, value)
            if n == 0:
                worst_ground = max(worst_ground, abs(value - de.ground_purity(eta)))
    out.append(Check("purity_series", "sum p_k^2", worst_series, 1e-12))
    out.append(Check("purity_ground", "1/cosh(2 eta)", worst_ground, 1e-12))
    out.append(Check("purity_mixed", "strictly below 1 for eta != 0", highest, 1.0 - 1e-12))

    worst = 0.0
    for eta in (0.5, 1.0, 2.0):
        q = math.tanh(eta) ** 2
        p = de.schmidt_spectrum(0, eta).probs[:21]
        k = np.arange(21)
        worst = max(worst, float(np.abs(p - (1.0 - q) * q ** k).max()))
    out.append(Check("thermal_identification", "(1-q) q^k, q = tanh^2", worst, 1e-14))

    out.append(Check("uv_invariance", "u'v' = uv, 1e4 samples", _uv_invariance(), 1e-12))

    worst = 0.0
    for eta in (0.0, math.log(2.0), 1.0, -1.3):
        u, v, zp, tp, ua, va = cv.squeeze_ellipse(eta)
        inv = math.exp(-2 * eta) * (zp + tp) ** 2 + math.exp(2 * eta) * (zp - tp) ** 2
        worst = max(worst, float(np.abs(inv - 2.0).max()),
                    abs(ua - math.exp(eta)), abs(va - math.exp(-eta)),
                    abs(float(np.abs(u).max()) - math.exp(eta)),
                    abs(float(np.abs(v).max()) - math.exp(-eta)))
    out.append(Check("ellipse_axes", "(e^eta, e^-eta), invariant = 2", worst, 1e-12))

    trap = orc.trapezoid_rule(-60.0, 60.0, 0.01)
    worst = 0.0
    for eta in (0.0, 0.5) + ETAS:
        second = trap.integrate(trap.nodes ** 2 * de.quark_distribution(eta, trap.nodes))
        worst = max(worst, abs(second - math.cosh(2 * eta) / 2))
    out.append(Check("quark_variance", "cosh(2 eta)/2 by trapezoid moment", float(worst), 1e-10))
    return out


def entropy_checks() -> list[Check]:
    out = []
    rule = orc.gauss_hermite(256)
    worst = 0.0
    for n in MODES:
        for eta in (-0.7,) + ETAS:
            closed = de.entropy(n, eta)
            spectral = de.spectral_entropy_of(de.schmidt_spectrum(n, eta))
            kernel = orc.spectral_entropy(orc.kernel_spectrum(orc.numeric_partial_trace(n, eta, rule)))
            worst = max(worst, abs(closed - spectral), abs(closed - kernel), abs(spectral - kernel))
    out.append(Check("entropy_triple", "closed form, -sum p ln p, kernel eigenvalues", worst, 1e-6))

    at_zero = max(abs(de.entropy(n, 0.0)) for n in range(11))
    out.append(Check("entropy_at_rest", "exactly 0 at eta = 0", at_zero, 0.0))

    worst = 0.0
    for n in MODES:
        for beta in np.round(np.arange(1, 10) * 0.1, 1):
            worst = max(worst, abs(de.entropy_velocity(n, beta) - de.entropy(n, math.atanh(beta))))
    out.append(Check("entropy_velocity", "rapidity form at atanh(beta)", worst, 1e-10))

    worst = 0.0
    for eta in (0.1, 0.5, 1.0, 2.0, 3.0):
        q = math.tanh(eta) ** 2
        k = np.arange(20000)
        p = (1.0 - q) * q ** k
        p = p[p > 0]
        worst = max(worst, abs(de.entropy(0, eta) + float(np.dot(p, np.log(p)))))
    out.append(Check("entropy_geometric", "entropy of (1-q) q^k", worst, 1e-12))
    return out


def operator_checks() -> list[Check]:
    out = []
    worst_minus = worst_plus = 0.0
    worst_ratio = 0.0
    for n in MODES:
        for eta in (0.0, 0.7, 1.2):
            coarse = orc.hminus_residual(n, eta, step=1e-3)
            fine = orc.hminus_residual(n, eta, step=5e-4)
            worst_minus = max(worst_minus, coarse)
            worst_ratio = max(worst_ratio, abs(coarse / fine - 4.0))
    for n1 in MODES:
        for n2 in MODES:
            coarse = orc.hplus_residual(n1, n2, step=1e-3)
            fine = orc.hplus_residual(n1, n2, step=5e-4)
            worst_plus = max(worst_plus, coarse)
            worst_ratio = max(worst_ratio, abs(coarse / fine - 4.0))
    out.append(Check("hminus_residual", "n psi, step 1e-3, |z|,|t| <= 3", worst_minus, 5e-3))
    out.append(Check("hplus_residual", "(n1+n2+1) f, step 1e-3, |x| <= 3", worst_plus, 5e-3))
    out.append(Check("residual_order", "step halving ratio 4 (second order)", worst_ratio, 1.0))
    return out


_RUNNERS = {
    "quadrature": quadrature_checks,
    "expansion": expansion_checks,
    "density": density_checks,
    "entropy": entropy_checks,
    "operators": operator_checks,
}


def run_suite(suite: str = "all", overrides: dict[str, float] | None = None) -> list[Check]:
    """Run one suite (or ``"all"``), applying per-check tolerance overrides."""
    names = SUITES if suite == "all" else (suite,)
    checks = []
    for name in names:
        checks.extend(_RUNNERS[name]())
    for check in checks:
        if overrides and check.check in overrides:
            check.tolerance = float(overrides[check.check])
    return checks
