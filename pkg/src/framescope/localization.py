"""Regions of the complex plane that must contain a multiplier's spectrum.

For a dual pair ``(phi, psi)`` the multiplier satisfies
``M(m) - mu I = M(m - mu)``, so any disk ``(mu, R)`` holding the symbol yields
the spectral disk ``(mu, R ||G||)``.  For a canonical dual pair the spectrum
lies in the convex hull of the symbol values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DomainError
from .frames import FrameSystem, canonical_dual, is_dual_pair
from .multipliers import Symbol, _as_symbol, _check_shapes, gram_norm

DUAL_TOL = 1e-8
_EPS = 1e-12


@dataclass(frozen=True)
class SpectralRegion:
    """A closed disk or convex hull.

    Hull vertices are counterclockwise and strictly convex.  One vertex is a
    point region, two a segment.
    """

    kind: str
    center: complex = 0j
    radius: float = 0.0
    vertices: tuple = ()
    label: str = ""

    def __post_init__(self):
        if self.kind == "disk":
            if not self.radius >= 0:
                raise DomainError(f"disk radius must be nonnegative, got {self.radius}")
        elif self.kind == "convex_hull":
            if not self.vertices:
                raise DomainError("convex hull needs at least one vertex")
        else:
            raise DomainError(f"unknown region kind {self.kind!r}")

    @classmethod
    def disk(cls, center, radius, label=""):
        return cls("disk", complex(center), float(radius), (), label)

    @classmethod
    def hull(cls, points, label=""):
        return cls("convex_hull", vertices=tuple(convex_hull(points)), label=label)

    def margin(self, z) -> float:
        """Signed distance to the boundary, positive inside."""
        z = complex(z)
        if self.kind == "disk":
            return self.radius - abs(z - self.center)
        return _hull_margin(self.vertices, z)

    def margins(self, points) -> np.ndarray:
        return np.array([self.margin(z) for z in points], dtype=float)

    def contains(self, z, tol=0.0) -> bool:
        return self.margin(z) >= -tol

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "label": self.label}
        if self.kind == "disk":
            out["center"] = [self.center.real, self.center.imag]
            out["radius"] = self.radius
        else:
            out["vertices"] = [[v.real, v.imag] for v in self.vertices]
        return out

    @classmethod
    def from_dict(cls, data) -> SpectralRegion:
        if data["kind"] == "disk":
            c = data["center"]
            return cls.disk(complex(c[0], c[1]), data["radius"], data.get("label", ""))
        verts = tuple(complex(v[0], v[1]) for v in data["vertices"])
        return cls("convex_hull", vertices=verts, label=data.get("label", ""))


@dataclass(frozen=True)
class ContainmentCertificate:
    region: SpectralRegion
    eigenvalues: np.ndarray
    margins: np.ndarray
    tol: float

    @property
    def overall(self) -> bool:
        return bool(np.all(self.margins >= -self.tol))

    @property
    def worst_margin(self) -> float:
        return float(self.margins.min())

    @property
    def verdicts(self) -> list[dict]:
        return [{"inside": bool(mg >= -self.tol), "margin": float(mg)} for mg in self.margins]

    def to_dict(self) -> dict:
        return {
            "region": self.region.to_dict(),
            "eigenvalues": [[float(z.real), float(z.imag)] for z in self.eigenvalues],
            "margins": [float(v) for v in self.margins],
            "tol": self.tol,
            "overall": self.overall,
        }


# -- geometry ---------------------------------------------------------------

def _cross(o, a, b):
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull(points) -> list[complex]:
    """Andrew's monotone chain; counterclockwise, collinear points dropped."""
    pts = sorted({(float(np.real(p)), float(np.imag(p))) for p in points})
    if not pts:
        raise DomainError("convex hull of an empty set")
    pts = [complex(x, y) for x, y in pts]
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return hull


def _segment_distance(z, a, b):
    ab = b - a
    denom = abs(ab) ** 2
    if denom == 0.0:
        return abs(z - a)
    t = ((z - a) * ab.conjugate()).real / denom
    t = min(1.0, max(0.0, t))
    return abs(z - (a + t * ab))


def _hull_margin(vertices, z):
    k = len(vertices)
    if k == 1:
        return -abs(z - vertices[0])
    if k == 2:
        return -_segment_distance(z, vertices[0], vertices[1])
    inside = True
    line_dist = math.inf
    for i in range(k):
        a, b = vertices[i], vertices[(i + 1) % k]
        d = _cross(a, b, z) / abs(b - a)
        line_dist = min(line_dist, d)
        if d < 0:
            inside = False
    if inside:
        return line_dist
    return -min(_segment_distance(z, vertices[i], vertices[(i + 1) % k]) for i in range(k))


def _circle_two(a, b):
    c = 0.5 * (a + b)
    return c, max(abs(a - c), abs(b - c))


def _circle_three(a, b, c):
    """Circumcircle, or None if the points are collinear."""
    ox = (min(a.real, b.real, c.real) + max(a.real, b.real, c.real)) / 2
    oy = (min(a.imag, b.imag, c.imag) + max(a.imag, b.imag, c.imag)) / 2
    o = complex(ox, oy)
    a, b, c = a - o, b - o, c - o
    d = 2.0 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    if d == 0.0:
        return None
    na, nb, nc = abs(a) ** 2, abs(b) ** 2, abs(c) ** 2
    x = (na * (b.imag - c.imag) + nb * (c.imag - a.imag) + nc * (a.imag - b.imag)) / d
    y = (na * (c.real - b.real) + nb * (a.real - c.real) + nc * (b.real - a.real)) / d
    center = complex(x, y)
    r = max(abs(center - a), abs(center - b), abs(center - c))
    return center + o, r


def _inside(circle, p):
    c, r = circle
    return abs(p - c) <= r * (1 + 1e-14) + 1e-300


def min_enclosing_disk(points) -> SpectralRegion:
    """Smallest enclosing disk, Welzl-style incremental construction in input order."""
    pts = [complex(p) for p in np.ravel(np.asarray(points, dtype=complex))]
    if not pts:
        raise DomainError("minimal enclosing disk of an empty set")
    circle = None
    for i, p in enumerate(pts):
        if circle is None or not _inside(circle, p):
            circle = _mec_one(pts[: i + 1], p)
    return SpectralRegion.disk(circle[0], circle[1])


def _mec_one(points, p):
    circle = (p, 0.0)
    for i, q in enumerate(points):
        if not _inside(circle, q):
            if circle[1] == 0.0:
                circle = _circle_two(p, q)
            else:
                circle = _mec_two(points[: i + 1], p, q)
    return circle


def _mec_two(points, p, q):
    circ = _circle_two(p, q)
    left = right = None
    for r in points:
        if _inside(circ, r):
            continue
        cross = _cross(p, q, r)
        c = _circle_three(p, q, r)
        if c is None:
            continue
        if cross > 0 and (left is None or _cross(p, q, c[0]) > _cross(p, q, left[0])):
            left = c
        elif cross < 0 and (right is None or _cross(p, q, c[0]) < _cross(p, q, right[0])):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[1] <= right[1] else right


# -- spectral regions -------------------------------------------------------

def require_dual(phi: FrameSystem, psi: FrameSystem, tol: float = DUAL_TOL) -> float:
    ok, defect = is_dual_pair(phi, psi, tol)
    if not ok:
        raise DomainError(f"systems are not a dual pair (duality defect {defect:.3e} > {tol:.1e})")
    return defect


def _symbol_disk(m: Symbol, disk):
    if disk is None:
        region = min_enclosing_disk(m.values)
        return region.center, region.radius
    mu, radius = complex(disk[0]), float(disk[1])
    slack = _EPS * max(1.0, radius)
    dist = np.abs(m.values - mu)
    bad = np.flatnonzero(dist > radius + slack)
    if bad.size:
        n = int(bad[0])
        raise DomainError(f"symbol value m[{n}] = {m.values[n]} lies outside disk ({mu}, {radius})")
    return mu, radius


def region_symbol_disk(m, phi, psi, disk=None, dual_tol: float = DUAL_TOL) -> SpectralRegion:
    """Disk ``(mu, R ||G||)`` where ``(mu, R)`` holds the symbol (default: its smallest disk)."""
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    require_dual(phi, psi, dual_tol)
    mu, radius = _symbol_disk(m, disk)
    return SpectralRegion.disk(mu, radius * gram_norm(phi, psi), "symbol disk")


def _real_center_radius(m: Symbol):
    if not m.is_real:
        raise DomainError("symbol is not real")
    hi, lo = float(m.values.real.max()), float(m.values.real.min())
    return 0.5 * (hi + lo), 0.5 * (hi - lo)


def region_real_symbol(m, phi, psi, dual_tol: float = DUAL_TOL) -> SpectralRegion:
    """Disk centred at the midpoint of the symbol's range, radius half-range times ``||G||``."""
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    center, half = _real_center_radius(m)
    require_dual(phi, psi, dual_tol)
    return SpectralRegion.disk(center, half * gram_norm(phi, psi), "real symbol disk")


def region_convex_hull(m) -> SpectralRegion:
    m = _as_symbol(m)
    return SpectralRegion.hull(m.values, "convex hull")


def region_prop2(m, phi, psi, disk=None, real=False, dual_tol: float = DUAL_TOL) -> SpectralRegion:
    """The coarser disk obtained with ``sqrt(B_phi B_psi)`` in place of ``||G||``."""
    m = _as_symbol(m)
    _check_shapes(m, phi, psi)
    require_dual(phi, psi, dual_tol)
    if real:
        center, radius = _real_center_radius(m)
    else:
        center, radius = _symbol_disk(m, disk)
    scale = math.sqrt(phi.bounds.upper * psi.bounds.upper)
    return SpectralRegion.disk(center, radius * scale, "bessel-bound disk")


def is_canonical_dual(phi: FrameSystem, psi: FrameSystem, tol: float = DUAL_TOL) -> bool:
    """True if ``psi`` matches the canonical dual of ``phi`` entrywise to ``tol`` (relative)."""
    if phi.dim != psi.dim or phi.count != psi.count or not phi.bounds.is_frame:
        return False
    ref = canonical_dual(phi).vectors
    scale = max(1.0, float(np.abs(ref).max()))
    return bool(np.abs(ref - psi.vectors).max() <= tol * scale)


def certify(region: SpectralRegion, t, tol: float | None = None) -> ContainmentCertificate:
    """Check every eigenvalue of ``t`` against ``region``."""
    eig = linalg.eig_general(t).eigenvalues
    if tol is None:
        tol = 1e-8 * (1.0 + float(np.max(np.abs(eig))))
    return ContainmentCertificate(region, eig, region.margins(eig), float(tol))
