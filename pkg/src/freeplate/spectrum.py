"""Eigenmodes of the free plate on the unit ball.

The fundamental tone is the first root a* of the characteristic function of
angular order one on (0, p), where p is the first positive zero of j_1'.
The characteristic value is negative for small a and positive at p, so a
sign change is guaranteed; the scan locates the first one and Brent's method
sharpens it.  The eigenvalue is omega = a*^2 (a*^2 + tau), increasing in a,
which is why the first root is the fundamental one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .bessel import ScaledValue, j1_prime_first_zero, ultra_i_scaled, ultra_j
from .boundary import (
    PlateParams,
    bending_op_i,
    bending_op_j,
    characteristic_fn,
    k_angular,
    mode_coefficient_scaled,
    shear_op_i,
    shear_op_j,
)
from .quadrature import radial_integral, refined_radial_integral

__all__ = [
    "BracketError",
    "SpectralPoint",
    "first_root",
    "fundamental_tone",
    "membrane_mode_constant",
    "membrane_tone",
    "tone_for_radius",
]

_SCAN_POINTS = 2000
_SCAN_EPS = 1e-8  # scan starts at eps * a_max; a = 0 is excluded by design
_XTOL = 1e-13
_MAX_REFINES = 3


class BracketError(RuntimeError):
    """No sign change found where the bracketing lemmas guarantee one.

    Carries the scan trace; this signals a defect, not a recoverable state.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or {}


@dataclass(frozen=True)
class SpectralPoint:
    """One solved ball eigenmode record.

    ``residual_M`` and ``residual_V`` are the boundary residuals of the
    assembled radial mode at the boundary, relative to the magnitude of the
    largest contributing term.  ``gamma_scaled`` carries gamma as
    mantissa * e**scale so that huge-tension modes remain representable.
    """

    l: int
    a: float
    b: float
    gamma: float
    omega: float
    residual_M: float
    residual_V: float
    params: PlateParams
    gamma_scaled: ScaledValue


def _first_crossing(grid: np.ndarray, w: np.ndarray):
    """Index of the first sign change, or None."""
    zeros = np.nonzero(w == 0.0)[0]
    sign_flip = np.nonzero(np.signbit(w[:-1]) != np.signbit(w[1:]))[0]
    if zeros.size and (not sign_flip.size or zeros[0] <= sign_flip[0]):
        return ("exact", int(zeros[0]))
    if sign_flip.size:
        return ("bracket", int(sign_flip[0]))
    return None


def _scan_first_root(l, params, a_lo, a_hi, scan_points):
    """Uniform scan plus bisection refinement for the first root on (a_lo, a_hi]."""
    n = scan_points
    for attempt in range(_MAX_REFINES + 1):
        grid = np.linspace(a_lo, a_hi, n)
        w = characteristic_fn(l, grid, params)
        if not np.all(np.isfinite(w)):
            raise ArithmeticError(
                f"characteristic function not finite on scan (l={l}, params={params})"
            )
        hit = _first_crossing(grid, w)
        if hit is not None:
            kind, i = hit
            if kind == "exact":
                return float(grid[i]), grid, w
            f = lambda x: float(characteristic_fn(l, x, params))
            root = brentq(f, grid[i], grid[i + 1], xtol=_XTOL, rtol=8.9e-16)
            return float(root), grid, w
        # dip heuristic: a near-miss of zero without a sign flip warrants a
        # finer scan before concluding absence
        absw = np.abs(w)
        if absw.min() >= 1e-3 * np.median(absw) or attempt == _MAX_REFINES:
            return None, grid, w
        n *= 2
    return None, grid, w


def first_root(l: int, params: PlateParams, a_max: float,
               scan_points: int = _SCAN_POINTS):
    """Smallest root of the characteristic function of order l on (0, a_max].

    Returns None when no sign change is found; absence is a legitimate
    result (for sigma >= 0 the order-zero characteristic function has no
    root below p, for instance).
    """
    if a_max <= 0:
        raise ValueError(f"a_max must be positive, got {a_max}")
    root, _, _ = _scan_first_root(l, params, _SCAN_EPS * a_max, a_max, scan_points)
    return root


def fundamental_tone(params: PlateParams,
                     scan_points: int = _SCAN_POINTS) -> SpectralPoint:
    """Fundamental tone of the free plate on the unit ball.

    Solves for the first root of the order-one characteristic function on
    (0, p) and assembles the full mode record.  Raises ``BracketError`` if
    the guaranteed sign change is absent, which would contradict the
    bracketing facts and indicates a defect upstream.
    """
    p = j1_prime_first_zero(params.d)
    if params.b_of(p) > 600.0:
        # huge tension: modified-branch evaluations fall on the log-sum path,
        # whose per-point cost warrants a coarser first bracket
        scan_points = min(scan_points, 256)
    a, grid, w = _scan_first_root(1, params, _SCAN_EPS * p, p, scan_points)
    if a is None:
        raise BracketError(
            f"no sign change of the order-1 characteristic function on (0, {p}) "
            f"for {params}",
            trace={
                "a_grid_head": grid[:5].tolist(),
                "w_head": w[:5].tolist(),
                "w_min": float(np.min(w)),
                "w_max": float(np.max(w)),
            },
        )
    return _assemble_point(1, a, params)


def _assemble_point(l: int, a: float, params: PlateParams) -> SpectralPoint:
    b = float(params.b_of(a))
    gamma_sv = mode_coefficient_scaled(l, a, params)
    gm = float(gamma_sv.mantissa)
    gamma = gm * math.exp(-b) if b < 700.0 else 0.0

    mj = float(bending_op_j(l, a, params))
    mi = float(bending_op_i(l, b, params).mantissa)
    res_m_num = abs(mj + gm * mi)
    res_m = res_m_num / max(abs(mj), abs(gm * mi), 1e-300)

    d, s = params.d, params.sigma
    kl = k_angular(l, d)
    jp = ultra_j(d, l, a, 1)
    j0 = ultra_j(d, l, a)
    ip = ultra_i_scaled(d, l, b, 1).mantissa
    i0 = ultra_i_scaled(d, l, b).mantissa
    vj = float(shear_op_j(l, a, params))
    vi = float(shear_op_i(l, a, params).mantissa)
    term_scale = max(
        abs(a * b * b * jp),
        abs((1.0 - s) * kl * (a * jp - j0)),
        abs(gm) * abs(a * a * b * ip),
        abs(gm) * abs((1.0 - s) * kl * (b * ip - i0)),
        1e-300,
    )
    res_v = abs(vj + gm * vi) / term_scale

    omega = a * a * (a * a + params.tau)
    return SpectralPoint(
        l=l, a=float(a), b=b, gamma=gamma, omega=float(omega),
        residual_M=float(res_m), residual_V=float(res_v),
        params=params, gamma_scaled=gamma_sv,
    )


def boundary_residuals(l: int, a: float, params: PlateParams) -> tuple[float, float]:
    """Residuals of both boundary conditions for the mode built at a, with
    gamma chosen to annihilate the bending condition."""
    pt = _assemble_point(l, a, params)
    return pt.residual_M, pt.residual_V


def tone_for_radius(params: PlateParams, radius: float) -> SpectralPoint:
    """Fundamental tone of the ball of the given radius.

    Dilation by s maps (tau, ball) to (s^-2 tau, s ball) and scales tones by
    s^-4, so the radius-R problem is the unit-ball problem at tension R^2 tau
    with omega divided by R^4.  The reported a and b are the physical radial
    frequencies (b^2 - a^2 = tau again); gamma is unchanged by dilation.
    """
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    unit = fundamental_tone(PlateParams(params.d, radius**2 * params.tau, params.sigma))
    return SpectralPoint(
        l=unit.l,
        a=unit.a / radius,
        b=unit.b / radius,
        gamma=unit.gamma,
        omega=unit.omega / radius**4,
        residual_M=unit.residual_M,
        residual_V=unit.residual_V,
        params=params,
        gamma_scaled=unit.gamma_scaled,
    )


def membrane_tone(d: int) -> float:
    """Fundamental tone of the free membrane on the unit ball, p^2."""
    p = j1_prime_first_zero(d)
    return p * p


def membrane_mode_constant(params: PlateParams, nodes: int = 128) -> float:
    """Second-order energy of the membrane fundamental mode over its mass.

    With v(r) = j_1(p r) (the free-membrane mode), this is the constant C
    with omega_1 <= C + tau * p^2 for every tension, computed by radial
    quadrature; a doubled rule guards the stated 1e-10 relative accuracy.
    """
    d, s = params.d, params.sigma
    p = j1_prime_first_zero(d)

    def energy(r):
        v = ultra_j(d, 1, p * r)
        vp = p * ultra_j(d, 1, p * r, 1)
        vpp = p * p * ultra_j(d, 1, p * r, 2)
        # radial Laplacian of j_1(p r) is -p^2 j_1(p r)
        return (1.0 - s) * (vpp**2 + 3.0 * (d - 1) * (v - r * vp) ** 2 / r**4) \
            + s * p**4 * v**2

    def mass(r):
        return ultra_j(d, 1, p * r) ** 2

    num, num_err = refined_radial_integral(energy, d, nodes=nodes)
    den, den_err = refined_radial_integral(mass, d, nodes=nodes)
    value = num / den
    rel_err = num_err / abs(num) + den_err / abs(den)
    if rel_err > 1e-10:
        # one more doubling; the integrands are analytic so this converges fast
        num = radial_integral(energy, d, nodes=4 * nodes)
        den = radial_integral(mass, d, nodes=4 * nodes)
        value = num / den
    return float(value)
