"""Free plate under tension on the ball: spectra and numerical certificates."""

from .bessel import (
    ArgumentCapError,
    ScaledValue,
    j1_prime_first_zero,
    power_series_coefficient,
    series_tail_factors,
    ultra_i,
    ultra_i_scaled,
    ultra_j,
)
from .boundary import (
    PlateParams,
    bending_op_i,
    bending_op_j,
    characteristic_fn,
    k_angular,
    mode_coefficient,
    mode_coefficient_scaled,
    shear_op_i,
    shear_op_j,
    sigma_window,
)
from .spectrum import (
    BracketError,
    SpectralPoint,
    first_root,
    fundamental_tone,
    membrane_mode_constant,
    membrane_tone,
    tone_for_radius,
)
from .trial_profile import RadialProfile, rayleigh_quotient_ball
from .domains import DomainSpec, domain_integral
from .verdicts import VerdictRecord

__all__ = [
    "ArgumentCapError",
    "BracketError",
    "DomainSpec",
    "PlateParams",
    "RadialProfile",
    "ScaledValue",
    "SpectralPoint",
    "VerdictRecord",
    "bending_op_i",
    "bending_op_j",
    "characteristic_fn",
    "domain_integral",
    "first_root",
    "fundamental_tone",
    "j1_prime_first_zero",
    "k_angular",
    "membrane_mode_constant",
    "membrane_tone",
    "mode_coefficient",
    "mode_coefficient_scaled",
    "power_series_coefficient",
    "rayleigh_quotient_ball",
    "series_tail_factors",
    "shear_op_i",
    "shear_op_j",
    "sigma_window",
    "tone_for_radius",
    "ultra_i",
    "ultra_i_scaled",
    "ultra_j",
]
