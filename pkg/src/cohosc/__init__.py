"""Covariant harmonic oscillator: boosts as squeezes, traced-out time separation, entropy."""

from .covariant import (
    CartesianModes3D,
    LightConePoint,
    MassShellParams,
    SpaceTimePoint,
    beta_to_rapidity,
    boost,
    from_lightcone,
    hadron_mass,
    psi,
    psi_rest_3d,
    squeeze_ellipse,
    to_lightcone,
)
from .density import (
    EntropyReport,
    SchmidtSpectrum,
    effective_temperature,
    entropy,
    entropy_report,
    entropy_velocity,
    ground_reduced_density,
    momentum_distribution,
    pure_density,
    purity,
    quark_distribution,
    reduced_density,
    schmidt_spectrum,
)
from .oracle import (
    DensityKernel,
    QuadratureRule,
    gauss_hermite,
    hminus_residual,
    hplus_residual,
    kernel_spectrum,
    numeric_partial_trace,
    spectral_entropy,
    trapezoid_rule,
)
from .special import DomainError, chi, hermite, log_binomial_weight
from .squeeze import (
    NormalCoords,
    TruncationError,
    TwoModePoint,
    reconstruct,
    squeeze_coefficient,
    squeeze_coefficients,
    squeezed_state,
    to_normal,
)

__version__ = "0.1.0"
