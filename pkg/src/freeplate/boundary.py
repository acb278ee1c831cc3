"""Natural boundary operators of the free plate on the unit ball.

A separated mode u = f(r) Y_l carries two boundary conditions at r = 1: the
second-order bending condition M u = (1-sigma) u_rr + sigma Lap(u) and the
third-order shear/tension condition
V u = tau u_r + (1-sigma) K_l (u_r - u) - (Lap u)_r, where K_l = l(l+d-2) is
the spherical-harmonic eigenvalue.  On the oscillatory branch f = j_l(a r)
the Laplacian acts as -a**2, on the modified branch f = i_l(b r) as +b**2
with b**2 = a**2 + tau.

A nontrivial mode j_l(ar) + gamma i_l(br) satisfying both conditions exists
exactly where the characteristic combination

    W_l(a) = M[j-branch] V[i-branch] - M[i-branch] V[j-branch]

vanishes; gamma = -M[j]/M[i] then annihilates the bending condition.  All
modified-branch factors are carried at the common scale e**-b, which leaves
signs, roots and the value of gamma untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bessel import ScaledValue, ultra_i_scaled, ultra_j

__all__ = [
    "PlateParams",
    "SingularModeError",
    "bending_op_i",
    "bending_op_j",
    "characteristic_fn",
    "k_angular",
    "mode_coefficient",
    "mode_coefficient_scaled",
    "shear_op_i",
    "shear_op_j",
    "sigma_window",
]


class SingularModeError(ArithmeticError):
    """Bending operator on the modified branch vanished; gamma is undefined."""


def sigma_window(d: int, guard: float = 0.0) -> tuple[float, float]:
    """Open admissible Poisson-ratio interval for dimension d.

    With ``guard > 0`` the endpoints are pulled inside by that amount, which
    is how endpoint studies are run against the open window.
    """
    return (-1.0 / (d - 1) + guard, 1.0 - guard)


@dataclass(frozen=True)
class PlateParams:
    """Plate parameter triple (dimension, tension, Poisson ratio)."""

    d: int
    tau: float
    sigma: float

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.d}")
        if not self.tau > 0:
            raise ValueError(f"tension must be positive, got {self.tau}")
        lo, hi = sigma_window(self.d)
        if not lo < self.sigma < hi:
            raise ValueError(
                f"Poisson ratio must lie in ({lo:.6g}, {hi:.6g}) for d={self.d}, "
                f"got {self.sigma}"
            )

    @property
    def alpha(self) -> float:
        """Magnitude |sigma|, the natural parameter on the auxetic side."""
        return abs(self.sigma)

    def b_of(self, a):
        return np.sqrt(np.asarray(a, dtype=float) ** 2 + self.tau)


def k_angular(l: int, d: int) -> int:
    """Spherical-harmonic eigenvalue K_l = l(l+d-2)."""
    return l * (l + d - 2)


def bending_op_j(l: int, a, params: PlateParams):
    """Bending condition applied to j_l(a r) Y_l at r=1:
    (1-sigma) a^2 j_l''(a) - sigma a^2 j_l(a)."""
    a = np.asarray(a, dtype=float)
    s = params.sigma
    return a * a * ((1.0 - s) * ultra_j(params.d, l, a, 2) - s * ultra_j(params.d, l, a))


def bending_op_i(l: int, b, params: PlateParams) -> ScaledValue:
    """Bending condition applied to i_l(b r) Y_l at r=1, at scale b:
    (1-sigma) b^2 i_l''(b) + sigma b^2 i_l(b)."""
    b = np.asarray(b, dtype=float)
    s = params.sigma
    ipp = ultra_i_scaled(params.d, l, b, 2).mantissa
    i0 = ultra_i_scaled(params.d, l, b).mantissa
    return ScaledValue(b * b * ((1.0 - s) * ipp + s * i0), b + 0.0)


def shear_op_j(l: int, a, params: PlateParams):
    """Shear/tension condition applied to j_l(a r) Y_l at r=1:
    a b^2 j_l'(a) + (1-sigma) K_l (a j_l'(a) - j_l(a))."""
    a = np.asarray(a, dtype=float)
    d, s = params.d, params.sigma
    kl = k_angular(l, d)
    jp = ultra_j(d, l, a, 1)
    j0 = ultra_j(d, l, a)
    b2 = a * a + params.tau
    return a * b2 * jp + (1.0 - s) * kl * (a * jp - j0)


def shear_op_i(l: int, a, params: PlateParams) -> ScaledValue:
    """Shear/tension condition applied to i_l(b r) Y_l at r=1, at scale b:
    -a^2 b i_l'(b) + (1-sigma) K_l (b i_l'(b) - i_l(b))."""
    a = np.asarray(a, dtype=float)
    d, s = params.d, params.sigma
    kl = k_angular(l, d)
    b = params.b_of(a)
    ip = ultra_i_scaled(d, l, b, 1).mantissa
    i0 = ultra_i_scaled(d, l, b).mantissa
    return ScaledValue(-a * a * b * ip + (1.0 - s) * kl * (b * ip - i0), b + 0.0)


def characteristic_fn(l: int, a, params: PlateParams):
    """Mantissa of W_l(a) at scale b = sqrt(a^2 + tau).

    The sign equals the sign of the true characteristic value, and the roots
    in a are exactly the ball eigenmodes of angular order l with eigenvalue
    a^2 b^2.  Accepts scalar or array a > 0.
    """
    mj = bending_op_j(l, a, params)
    vj = shear_op_j(l, a, params)
    mi = bending_op_i(l, params.b_of(a), params)
    vi = shear_op_i(l, a, params)
    return mj * vi.mantissa - mi.mantissa * vj


def mode_coefficient_scaled(l: int, a, params: PlateParams) -> ScaledValue:
    """Mode-mixing coefficient gamma = -M[j]/M[i] as mantissa * e**(-b).

    The scaled carrier stays finite for arbitrarily large tension, where the
    plain float value of gamma underflows.
    """
    a = np.asarray(a, dtype=float)
    b = params.b_of(a)
    mj = bending_op_j(l, a, params)
    mi = bending_op_i(l, b, params)
    if np.any(mi.mantissa == 0.0):
        raise SingularModeError(
            f"bending operator vanished on the modified branch at "
            f"l={l}, a={a!r}, params={params}"
        )
    return ScaledValue(-mj / mi.mantissa, -b)


def mode_coefficient(l: int, a, params: PlateParams):
    """Plain float gamma; underflows to 0 once b is a few hundred."""
    sv = mode_coefficient_scaled(l, a, params)
    return sv.mantissa * np.exp(sv.scale)


def trace_hessian_gap(h: np.ndarray) -> float:
    """Slack d*|H|^2 - (tr H)^2 of the Laplacian-Hessian bound for one
    symmetric matrix; nonnegative, zero at multiples of the identity."""
    h = np.asarray(h, dtype=float)
    d = h.shape[0]
    return d * float(np.sum(h * h)) - float(np.trace(h)) ** 2
