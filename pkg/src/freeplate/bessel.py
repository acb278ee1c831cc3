"""Ultraspherical Bessel functions of dimension d >= 2.

The oscillatory kind j_l and the modified kind i_l generalize the spherical
Bessel functions to arbitrary dimension,

    j_l(z) = z**(-(d-2)/2) * J_{l+d/2-1}(z),
    i_l(z) = z**(-(d-2)/2) * I_{l+d/2-1}(z),

and are entire functions with the power series

    j_l(z) = sum_k (-1)**k c(l,k) z**(2k+l),      i_l(z) = sum_k c(l,k) z**(2k+l),
    c(l,k) = 2**(1 - d/2 - 2k - l) / (k! * Gamma(k + d/2 + l)).

Everything here is evaluated from those series, with derivatives up to order
four taken term by term (the sign certificates downstream need derivative
values whose signs are trustworthy, which rules out finite differences).

Modified-kind values grow like e**z and are therefore carried as
:class:`ScaledValue` pairs ``mantissa * e**scale`` with ``scale == z``, so
arguments far past the float64 overflow horizon remain usable.  The
oscillatory series suffers catastrophic cancellation for large arguments;
above ``_Z_J_FLOAT64`` the summation runs in guarded precision, and above
``Z_MAX_J`` the caller must rescale (``ArgumentCapError``).
"""

from __future__ import annotations

import math
import threading

import mpmath
import numpy as np
from scipy.special import gammaln

__all__ = [
    "ArgumentCapError",
    "ScaledValue",
    "Z_MAX_J",
    "i1_second_deriv_coeff",
    "i2_first_deriv_coeff",
    "j1_prime_first_zero",
    "power_series_coefficient",
    "series_tail_factors",
    "ultra_i",
    "ultra_i_scaled",
    "ultra_j",
]

LN2 = math.log(2.0)

#: oscillatory-series argument cap; beyond this the caller must rescale
Z_MAX_J = 50.0

# float64 alternating summation keeps >= ~12 correct digits up to here
_Z_J_FLOAT64 = 10.0
# direct positive summation of i_l stays inside float64 range up to here
_Z_I_DIRECT = 600.0

_REL_STOP = 1e-16
_MIN_TERMS = 8
_MAX_TERMS = 4000

MAX_DERIV = 4


class ArgumentCapError(ValueError):
    """Oscillatory-series argument exceeds the accuracy cap ``Z_MAX_J``."""


def _validate(d, l, m):
    if int(d) != d or d < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {d}")
    if int(l) != l or l < 0:
        raise ValueError(f"order must be an integer >= 0, got {l}")
    if int(m) != m or not 0 <= m <= MAX_DERIV:
        raise ValueError(f"derivative order must be in 0..{MAX_DERIV}, got {m}")
    return int(d), int(l), int(m)


def power_series_coefficient(l: int, k: int, d: int) -> float:
    """Coefficient c(l,k) of z**(2k+l) in the modified series i_l."""
    if l < 0 or k < 0 or d < 2:
        raise ValueError(f"need l >= 0, k >= 0, d >= 2, got l={l}, k={k}, d={d}")
    ga = k + d / 2.0 + l
    if ga <= 170.0 and k <= 170:
        return 2.0 ** (1.0 - d / 2.0 - 2 * k - l) / (math.factorial(k) * math.gamma(ga))
    # large-index fallback; relative error grows to ~1e-13 with the argument
    return math.exp(
        (1.0 - d / 2.0 - 2 * k - l) * LN2 - math.lgamma(k + 1) - math.lgamma(ga)
    )


def i1_second_deriv_coeff(k: int, d: int) -> float:
    """Coefficient of z**(2k-1) in i_1'', k >= 1."""
    if k < 1 or d < 2:
        raise ValueError(f"need k >= 1 and d >= 2, got k={k}, d={d}")
    return (
        2.0 ** (1.0 - 2 * k - d / 2.0)
        * (2 * k + 1)
        / (math.factorial(k - 1) * math.gamma(k + 1 + d / 2.0))
    )


def i2_first_deriv_coeff(k: int, d: int) -> float:
    """Coefficient of z**(2k+1) in i_2', k >= 0."""
    if k < 0 or d < 2:
        raise ValueError(f"need k >= 0 and d >= 2, got k={k}, d={d}")
    return (
        2.0 ** (-2 * k - d / 2.0)
        * (k + 1)
        / (math.factorial(k) * math.gamma(k + 2 + d / 2.0))
    )


def series_tail_factors(M: float) -> tuple[float, float]:
    """Tail inflation factors for the cubic upper bounds on i_1'' and i_2'.

    Returns the pair that multiplies the cubic coefficient so that
    i_1''(z) <= d_1 z + K_hess d_2 z**3 and i_2'(z) <= n_0 z + K_slope n_1 z**3
    hold on z**2 <= M.
    """
    if M <= 0:
        raise ValueError(f"need M > 0, got {M}")
    growth = math.expm1(M / 4.0)  # e**(M/4) - 1, stable for tiny M
    k_hess = 7.0 / 5.0 + 8.0 / (5.0 * M) * growth
    k_slope = 0.5 + 2.0 / M * growth
    return k_hess, k_slope


class ScaledValue:
    """A real number stored as ``mantissa * e**scale``.

    The sign of the represented value is the sign of the mantissa.  Both
    fields may be numpy arrays.  Used for modified-Bessel quantities whose
    plain float64 value would overflow.
    """

    __slots__ = ("mantissa", "scale")

    def __init__(self, mantissa, scale):
        self.mantissa = mantissa
        self.scale = scale

    def value(self):
        """Unscaled float value; overflows to inf past scale ~709."""
        return self.mantissa * np.exp(self.scale)

    def sign(self):
        return np.sign(self.mantissa)

    def __repr__(self):
        return f"ScaledValue({self.mantissa!r}, scale={self.scale!r})"


def _start_index(l: int, m: int) -> int:
    # lowest k whose term survives m differentiations (needs 2k+l >= m)
    return max(0, -((l - m) // 2))


def _falling(n: int, m: int) -> float:
    out = 1.0
    for i in range(m):
        out *= n - i
    return out


def _first_term_log(d, l, m, k0):
    # log magnitude of term k0 without the z power
    return (
        (1.0 - d / 2.0 - 2 * k0 - l) * LN2
        - math.lgamma(k0 + 1)
        - math.lgamma(k0 + d / 2.0 + l)
        + math.log(_falling(2 * k0 + l, m))
    )


def _at_zero(d, l, m) -> float:
    # only the term with 2k+l == m survives at z == 0
    if m >= l and (m - l) % 2 == 0:
        k = (m - l) // 2
        return power_series_coefficient(l, k, d) * math.factorial(m)
    return 0.0


def _series_scalar(d, l, z, m, alternating):
    """Direct summation at a scalar z > 0; also returns the abs-accumulation."""
    k0 = _start_index(l, m)
    n0 = 2 * k0 + l
    term = math.exp(_first_term_log(d, l, m, k0) + (n0 - m) * math.log(z))
    if alternating and k0 % 2 == 1:
        term = -term
    zz = -z * z if alternating else z * z
    total = term
    abs_total = abs(term)
    k = k0
    while True:
        n = 2 * k + l
        ratio = zz / (4.0 * (k + 1) * (k + d / 2.0 + l))
        if m:
            ratio *= (n + 2) * (n + 1) / ((n + 2 - m) * (n + 1 - m))
        term *= ratio
        k += 1
        total += term
        abs_total += abs(term)
        if k - k0 >= _MIN_TERMS and abs(term) < _REL_STOP * abs_total:
            # one extra term so the alternating tail bound covers the result
            term *= zz / (4.0 * (k + 1) * (k + d / 2.0 + l))
            total += term
            break
        if k - k0 > _MAX_TERMS:
            raise RuntimeError(f"series failed to converge (d={d} l={l} z={z} m={m})")
    return total, abs_total


def _series_array(d, l, z, m, alternating):
    """Vectorized direct summation over positive z values."""
    k0 = _start_index(l, m)
    n0 = 2 * k0 + l
    log0 = _first_term_log(d, l, m, k0)
    term = np.exp(log0 + (n0 - m) * np.log(z))
    if alternating and k0 % 2 == 1:
        term = -term
    zz = -z * z if alternating else z * z
    total = term.copy()
    abs_total = np.abs(term)
    k = k0
    while True:
        n = 2 * k + l
        ratio = zz / (4.0 * (k + 1) * (k + d / 2.0 + l))
        if m:
            ratio *= (n + 2) * (n + 1) / ((n + 2 - m) * (n + 1 - m))
        term = term * ratio
        k += 1
        total += term
        abs_total += np.abs(term)
        if k - k0 >= _MIN_TERMS and np.all(np.abs(term) < _REL_STOP * abs_total):
            total += term * zz / (4.0 * (k + 1) * (k + d / 2.0 + l))
            break
        if k - k0 > _MAX_TERMS:
            raise RuntimeError(f"series failed to converge (d={d} l={l} m={m})")
    return total


def _j_guarded(d, l, z, m):
    """Alternating series in guarded precision for 10 < z <= Z_MAX_J.

    Cancellation destroys roughly 0.44*z digits, so the working precision
    grows with the argument and the result is rounded back to float64.
    """
    with mpmath.workdps(36 + int(0.5 * z)):
        # cancellation eats ~0.44*z digits of the abs-accumulated sum, so the
        # stop threshold must track the working precision, not float64 eps
        stop = mpmath.mpf(10) ** (-(mpmath.mp.dps - 8))
        k0 = _start_index(l, m)
        zm = mpmath.mpf(z)
        c0 = (
            mpmath.power(2, mpmath.mpf(1) - mpmath.mpf(d) / 2 - 2 * k0 - l)
            / (mpmath.factorial(k0) * mpmath.gamma(k0 + mpmath.mpf(d) / 2 + l))
        )
        term = c0 * _falling(2 * k0 + l, m) * zm ** (2 * k0 + l - m)
        if k0 % 2 == 1:
            term = -term
        zz = -zm * zm
        total = term
        abs_total = abs(term)
        k = k0
        while True:
            n = 2 * k + l
            ratio = zz / (4 * (k + 1) * (k + mpmath.mpf(d) / 2 + l))
            if m:
                ratio *= mpmath.mpf((n + 2) * (n + 1)) / ((n + 2 - m) * (n + 1 - m))
            term *= ratio
            k += 1
            total += term
            abs_total += abs(term)
            if k - k0 >= _MIN_TERMS and abs(term) < stop * abs_total:
                break
        return float(total)


def _i_mantissa_logsum(d, l, z, m):
    """Scaled modified series for huge arguments, summed in log space."""
    k0 = _start_index(l, m)
    peak = max(int(z / 2.0), k0 + 1)
    k_hi = peak + int(8.0 * math.sqrt(peak)) + 40
    k = np.arange(k0, k_hi, dtype=np.float64)
    n = 2.0 * k + l
    log_t = (
        (1.0 - d / 2.0 - 2.0 * k - l) * LN2
        - gammaln(k + 1.0)
        - gammaln(k + d / 2.0 + l)
        + (n - m) * math.log(z)
    )
    if m:
        log_t += gammaln(n + 1.0) - gammaln(n - m + 1.0)
    top = log_t.max()
    return math.fsum(np.exp(log_t - top)) * math.exp(top - z)


def ultra_j(d: int, l: int, z, m: int = 0):
    """m-th derivative of the oscillatory function j_l at z (scalar or array).

    Raises ``ArgumentCapError`` for z > Z_MAX_J, where the alternating series
    is no longer certified; the caller is expected to rescale the problem.
    """
    d, l, m = _validate(d, l, m)
    z_arr = np.asarray(z, dtype=np.float64)
    if np.any(z_arr < 0):
        raise ValueError("argument must be nonnegative")
    if np.any(z_arr > Z_MAX_J):
        raise ArgumentCapError(f"argument exceeds cap {Z_MAX_J}; rescale the problem")
    if z_arr.ndim == 0:
        zf = float(z_arr)
        if zf == 0.0:
            return _at_zero(d, l, m)
        if zf <= _Z_J_FLOAT64:
            return _series_scalar(d, l, zf, m, alternating=True)[0]
        return _j_guarded(d, l, zf, m)
    out = np.empty_like(z_arr)
    zero = z_arr == 0.0
    small = (z_arr > 0.0) & (z_arr <= _Z_J_FLOAT64)
    big = z_arr > _Z_J_FLOAT64
    if zero.any():
        out[zero] = _at_zero(d, l, m)
    if small.any():
        out[small] = _series_array(d, l, z_arr[small], m, alternating=True)
    if big.any():
        out[big] = [_j_guarded(d, l, float(zi), m) for zi in z_arr[big]]
    return out


def ultra_i_scaled(d: int, l: int, z, m: int = 0) -> ScaledValue:
    """m-th derivative of the modified function i_l at z, scaled by e**-z.

    Returns a :class:`ScaledValue` with ``scale == z`` elementwise; the
    mantissa is positive for z > 0.  All series terms are positive, so no
    cancellation occurs at any argument size.
    """
    d, l, m = _validate(d, l, m)
    z_arr = np.asarray(z, dtype=np.float64)
    if np.any(z_arr < 0):
        raise ValueError("argument must be nonnegative")
    if z_arr.ndim == 0:
        zf = float(z_arr)
        if zf == 0.0:
            return ScaledValue(_at_zero(d, l, m), 0.0)
        if zf <= _Z_I_DIRECT:
            total, _ = _series_scalar(d, l, zf, m, alternating=False)
            return ScaledValue(total * math.exp(-zf), zf)
        return ScaledValue(_i_mantissa_logsum(d, l, zf, m), zf)
    mant = np.empty_like(z_arr)
    zero = z_arr == 0.0
    small = (z_arr > 0.0) & (z_arr <= _Z_I_DIRECT)
    big = z_arr > _Z_I_DIRECT
    if zero.any():
        mant[zero] = _at_zero(d, l, m)
    if small.any():
        zs = z_arr[small]
        mant[small] = _series_array(d, l, zs, m, alternating=False) * np.exp(-zs)
    if big.any():
        mant[big] = [_i_mantissa_logsum(d, l, float(zi), m) for zi in z_arr[big]]
    scale = z_arr.copy()
    scale[zero] = 0.0
    return ScaledValue(mant, scale)


def ultra_i(d: int, l: int, z, m: int = 0):
    """Unscaled i_l derivative; agrees with direct summation to ~1e-13 for
    moderate arguments and overflows to inf past z ~ 709."""
    sv = ultra_i_scaled(d, l, z, m)
    return sv.value()


_p11_cache: dict[int, float] = {}
_p11_lock = threading.Lock()


def j1_prime_first_zero(d: int) -> float:
    """First positive zero of j_1', located by bisection on (sqrt d, sqrt(d+2)).

    The square of the result lies strictly between d and d+2.  Cached per
    dimension; the cache is safe for concurrent use (idempotent writes).
    """
    d = int(d)
    cached = _p11_cache.get(d)
    if cached is not None:
        return cached
    lo, hi = math.sqrt(d), math.sqrt(d + 2)
    f_lo = ultra_j(d, 1, lo, 1)
    f_hi = ultra_j(d, 1, hi, 1)
    if not (f_lo > 0.0 > f_hi):
        raise RuntimeError(
            f"no sign change of j_1' on (sqrt({d}), sqrt({d + 2})): "
            f"f(lo)={f_lo}, f(hi)={f_hi}"
        )
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if ultra_j(d, 1, mid, 1) > 0.0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    with _p11_lock:
        _p11_cache.setdefault(d, root)
    return _p11_cache[d]
