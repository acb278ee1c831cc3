"""Test domains and integrals of radial functions over them.

The rearrangement comparison needs integrals of radial integrands over
volume-normalized non-ball domains.  Supported shapes: balls, annuli
(spherical shells) and axis-aligned ellipsoids in dimensions 2 and 3.  Every
domain is centered at the origin, so the integral reduces to a per-direction
radial integral up to the boundary radius of that direction.

Radial rules split at r = 1 because the trial profile switches to its linear
extension there and the integrands lose smoothness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import gauss_nodes

__all__ = ["DomainSpec", "domain_integral", "sphere_area", "unit_ball_volume"]


def unit_ball_volume(d: int) -> float:
    return math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)


def sphere_area(d: int) -> float:
    """Surface measure of the unit sphere in R^d."""
    return d * unit_ball_volume(d)


@dataclass(frozen=True)
class DomainSpec:
    """Origin-centered test domain.

    kind: "ball" (radius), "annulus" (inner_radius < radius) or "ellipsoid"
    (semi_axes).  ``normalized(d)`` rescales to the unit-ball volume, which
    is the footing on which every isoperimetric comparison runs.
    """

    kind: str
    radius: float = 1.0
    inner_radius: float = 0.0
    semi_axes: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in ("ball", "annulus", "ellipsoid"):
            raise ValueError(f"unsupported domain kind {self.kind!r}")
        if self.kind == "annulus" and not 0.0 < self.inner_radius < self.radius:
            raise ValueError("annulus needs 0 < inner_radius < radius")
        if self.kind == "ellipsoid":
            if not self.semi_axes or any(ax <= 0 for ax in self.semi_axes):
                raise ValueError("ellipsoid needs positive semi_axes")

    def volume(self, d: int) -> float:
        if self.kind == "ball":
            return unit_ball_volume(d) * self.radius**d
        if self.kind == "annulus":
            return unit_ball_volume(d) * (self.radius**d - self.inner_radius**d)
        if len(self.semi_axes) != d:
            raise ValueError(f"ellipsoid in R^{d} needs {d} semi-axes")
        return unit_ball_volume(d) * math.prod(self.semi_axes)

    def normalized(self, d: int) -> "DomainSpec":
        """Rescale to the volume of the unit ball."""
        if self.kind == "ball":
            return replace(self, radius=1.0)
        if self.kind == "annulus":
            # keep the stated inner radius, push the outer one out to match
            outer = (1.0 + self.inner_radius**d) ** (1.0 / d)
            return DomainSpec("annulus", radius=outer,
                              inner_radius=self.inner_radius)
        if len(self.semi_axes) != d:
            raise ValueError(f"ellipsoid in R^{d} needs {d} semi-axes")
        s = math.prod(self.semi_axes) ** (-1.0 / d)
        return DomainSpec("ellipsoid", semi_axes=tuple(s * ax for ax in self.semi_axes))


def _radial_profile_integral(f, d, lo, hi, nodes):
    """Integral of f(r) r^(d-1) on [lo, hi], split at the extension radius."""
    total = 0.0
    pieces = []
    if lo < min(hi, 1.0):
        pieces.append((lo, min(hi, 1.0)))
    if hi > max(lo, 1.0):
        pieces.append((max(lo, 1.0), hi))
    for a, b in pieces:
        r, w = gauss_nodes(nodes, a, b)
        total += float(np.sum(w * f(r) * r ** (d - 1)))
    return total


def _ellipsoid_directions(d: int, angular: int):
    """Direction grid and quadrature weights covering the unit sphere."""
    if d == 2:
        theta = (np.arange(angular) + 0.5) * (2.0 * math.pi / angular)
        dirs = np.stack([np.cos(theta), np.sin(theta)], axis=1)
        wts = np.full(angular, 2.0 * math.pi / angular)
        return dirs, wts
    if d == 3:
        n_u = max(16, angular // 8)
        n_phi = 2 * n_u
        u, wu = gauss_nodes(n_u, -1.0, 1.0)
        phi = (np.arange(n_phi) + 0.5) * (2.0 * math.pi / n_phi)
        su = np.sqrt(1.0 - u**2)
        dirs = np.stack([
            np.outer(su, np.cos(phi)).ravel(),
            np.outer(su, np.sin(phi)).ravel(),
            np.outer(u, np.ones(n_phi)).ravel(),
        ], axis=1)
        wts = np.outer(wu, np.full(n_phi, 2.0 * math.pi / n_phi)).ravel()
        return dirs, wts
    raise ValueError("ellipsoid quadrature supports d = 2 or 3 only")


def domain_integral(f, domain: DomainSpec, d: int, nodes: int = 128,
                    angular: int = 512) -> float:
    """Integral of the radial function f(|x|) over the domain in R^d.

    Ball and annulus integrals collapse to a single radial rule times the
    sphere area; ellipsoids use a per-direction boundary radius with an
    angular product rule (midpoint in the angles, which is spectrally
    accurate for these smooth periodic integrands).
    """
    if domain.kind == "ball":
        return sphere_area(d) * _radial_profile_integral(f, d, 0.0, domain.radius, nodes)
    if domain.kind == "annulus":
        return sphere_area(d) * _radial_profile_integral(
            f, d, domain.inner_radius, domain.radius, nodes)
    if len(domain.semi_axes) != d:
        raise ValueError(f"ellipsoid in R^{d} needs {d} semi-axes")
    dirs, wts = _ellipsoid_directions(d, angular)
    inv_axes = 1.0 / np.asarray(domain.semi_axes)
    radii = 1.0 / np.sqrt(np.sum((dirs * inv_axes) ** 2, axis=1))
    total = 0.0
    for w, r_max in zip(wts, radii):
        total += w * _radial_profile_integral(f, d, 0.0, float(r_max), nodes)
    return total
