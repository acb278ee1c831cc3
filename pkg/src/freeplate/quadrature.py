"""Gauss-Legendre helpers shared by the radial and domain integrators."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre


@lru_cache(maxsize=64)
def _unit_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = roots_legendre(n)
    return 0.5 * (x + 1.0), 0.5 * w


def gauss_nodes(n: int, lo: float = 0.0, hi: float = 1.0):
    """Nodes and weights on [lo, hi]."""
    x, w = _unit_rule(n)
    span = hi - lo
    return lo + span * x, span * w


def radial_integral(f, d: int, lo: float = 0.0, hi: float = 1.0, nodes: int = 128) -> float:
    """Integral of f(r) r**(d-1) dr over [lo, hi] (radial part of a ball
    integral; the sphere area factor is the caller's business)."""
    r, w = gauss_nodes(nodes, lo, hi)
    return float(np.sum(w * f(r) * r ** (d - 1)))


def refined_radial_integral(f, d: int, lo: float = 0.0, hi: float = 1.0,
                            nodes: int = 128) -> tuple[float, float]:
    """Radial integral plus a doubling-based error estimate."""
    coarse = radial_integral(f, d, lo, hi, nodes)
    fine = radial_integral(f, d, lo, hi, 2 * nodes)
    return fine, abs(fine - coarse)
