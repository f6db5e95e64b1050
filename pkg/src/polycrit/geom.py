"""Planar convex geometry on complex points: hulls, membership, and the
inscribed midpoint-tangent ellipse of a triangle.

Predicates use tolerances relative to the spread of the input (largest
pairwise distance), so they are invariant under similarity transforms.
"""

from __future__ import annotations

import math

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .fov import EllipseParams, ellipse_from_foci


def point_spread(points) -> float:
    """Largest pairwise distance."""
    p = np.atleast_1d(np.asarray(points, dtype=complex))
    if p.size < 2:
        return 0.0
    return float(np.max(np.abs(p[:, None] - p[None, :])))


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a - o).real * (b - o).imag - (a - o).imag * (b - o).real


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise vertex list; 1 or 2 vertices encode a point or a
    segment. Clockwise input is reversed on ingestion so every consumer
    sees one orientation convention."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.vertices, dtype=complex))
        if v.size == 0:
            raise ValueError("polygon needs at least one vertex")
        if v.size >= 3:
            area2 = sum(
                (v[k].real * v[(k + 1) % v.size].imag - v[k].imag * v[(k + 1) % v.size].real)
                for k in range(v.size)
            )
            if area2 < 0:
                v = v[::-1].copy()
        object.__setattr__(self, "vertices", v)
        if v.size < 3:
            return
        scale = point_spread(v)
        n = v.size
        for k in range(n):
            if abs(v[k] - v[(k + 1) % n]) <= TOL.dedup * scale:
                raise ValueError("vertices must be distinct")
            if _cross(v[k], v[(k + 1) % n], v[(k + 2) % n]) < -1e-12 * scale**2:
                raise ValueError("vertices must turn counterclockwise")


def _line_distance(z: complex, a: complex, b: complex) -> float:
    return abs(_cross(a, b, z)) / abs(b - a)


def _segment_distance(z: complex, a: complex, b: complex) -> float:
    d = b - a
    if d == 0:
        return abs(z - a)
    t = ((z - a).real * d.real + (z - a).imag * d.imag) / abs(d) ** 2
    t = min(max(t, 0.0), 1.0)
    return abs(z - (a + t * d))


def convex_hull(points, tol: float = TOL.geometry) -> ConvexPolygon:
    """Counterclockwise convex hull by monotone chain.

    Coincident inputs are merged at ``TOL.dedup * spread`` and vertices
    within ``tol * spread`` of the chord of their neighbors are dropped,
    so near-collinear triples do not produce sliver vertices. Collapsed
    outputs are a single point or a segment.
    """
    pts = np.atleast_1d(np.asarray(points, dtype=complex))
    if pts.size == 0:
        raise ValueError("need at least one point")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    scale = point_spread(pts)
    if scale == 0.0:
        return ConvexPolygon(np.array([pts[0]]))
    order = np.lexsort((pts.imag, pts.real))
    kept: list[complex] = []
    for idx in order:
        z = complex(pts[idx])
        if all(abs(z - w) > TOL.dedup * scale for w in kept):
            kept.append(z)
    if len(kept) == 1:
        return ConvexPolygon(np.array(kept))

    def chain(seq):
        out: list[complex] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = chain(kept)
    upper = chain(kept[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return ConvexPolygon(np.array([kept[0], kept[-1]]))

    # drop vertices within tol*scale of the chord of their neighbors
    changed = True
    while changed and len(hull) > 2:
        changed = False
        for k in range(len(hull)):
            prev = hull[k - 1]
            nxt = hull[(k + 1) % len(hull)]
            if _line_distance(hull[k], prev, nxt) <= tol * scale:
                del hull[k]
                changed = True
                break
    if len(hull) == 2:
        return ConvexPolygon(np.array(hull))
    return ConvexPolygon(np.array(hull))


def edge_midpoints(p: ConvexPolygon) -> np.ndarray:
    """Midpoints of the polygon sides, cyclically; a segment has one."""
    v = p.vertices
    if v.size < 2:
        raise ValueError("a single vertex has no edges")
    if v.size == 2:
        return np.array([(v[0] + v[1]) / 2.0])
    return (v + np.roll(v, -1)) / 2.0


def hull_violation(p: ConvexPolygon, z: complex) -> float:
    """Worst signed distance of z to the polygon edge lines (positive
    outside). Degenerate polygons measure plain distance."""
    v = p.vertices
    zz = complex(z)
    if v.size == 1:
        return abs(zz - v[0])
    if v.size == 2:
        return _segment_distance(zz, complex(v[0]), complex(v[1]))
    worst = -math.inf
    n = v.size
    for k in range(n):
        a, b = complex(v[k]), complex(v[(k + 1) % n])
        normal = -1j * (b - a)
        normal /= abs(normal)
        worst = max(worst, (np.conj(normal) * (zz - a)).real)
    return float(worst)


def point_in_hull(p: ConvexPolygon, z: complex, tol: float = TOL.geometry) -> bool:
    """True iff z is within absolute distance ``tol`` of the closed
    polygon (signed distance to every edge line at least -tol)."""
    return hull_violation(p, z) <= tol


def steiner_inellipse(v1: complex, v2: complex, v3: complex) -> EllipseParams:
    """The inscribed ellipse of a triangle tangent to each side at its
    midpoint, constructed geometrically.

    The affine map sending the reference equilateral triangle
    (1, w, w^2), w = exp(2*pi*i/3), to (v1, v2, v3) carries that
    triangle's incircle (center 0, radius 1/2) to the inellipse. The
    center is the centroid; axes and orientation come from the singular
    value decomposition of the real 2x2 linear part scaled by 1/2. This
    never touches any derivative or eigenvalue computation, so it can sit
    on the opposite side of a verification from a critical-point solver.
    """
    a, b, c = complex(v1), complex(v2), complex(v3)
    scale = point_spread([a, b, c])
    if abs(((b - a) * np.conj(c - a)).imag) <= TOL.collinear * scale**2:
        raise ValueError("vertices are collinear")
    centroid = (a + b + c) / 3.0
    w = np.exp(2j * np.pi / 3.0)
    refs = np.array([1.0, w, w**2])
    rel = np.array([a, b, c]) - centroid
    alpha = complex(np.mean(rel * np.conj(refs)))
    beta = complex(np.mean(rel * refs))
    # real 2x2 matrix of z -> (alpha z + beta conj(z)) / 2
    lin = 0.5 * np.array(
        [
            [(alpha + beta).real, (beta - alpha).imag],
            [(alpha + beta).imag, (alpha - beta).real],
        ]
    )
    u, s, _ = np.linalg.svd(lin)
    major, minor = float(s[0]), float(s[1])
    axis = complex(u[0, 0], u[1, 0])
    half_focal = math.sqrt(max(major**2 - minor**2, 0.0))
    return ellipse_from_foci(centroid - half_focal * axis, centroid + half_focal * axis, minor)


def ellipse_tangency_check(e: EllipseParams, a: complex, b: complex, tol: float = TOL.geometry) -> bool:
    """True iff the segment ab touches the ellipse at its midpoint: the
    midpoint satisfies the normalized ellipse equation within ``tol`` and
    the segment direction is parallel to the tangent there within angle
    ``tol``. Degenerate ellipses (minor semi-axis <= tol) are rejected.
    """
    if e.minor_semi_axis <= tol:
        raise ValueError("degenerate ellipse")
    phase = np.exp(-1j * e.rotation)
    mid = (complex(a) + complex(b)) / 2.0
    w = phase * (mid - e.center)
    x, y = w.real, w.imag
    big, small = e.major_semi_axis, e.minor_semi_axis
    if abs((x / big) ** 2 + (y / small) ** 2 - 1.0) > tol:
        return False
    tangent = complex(-y / small**2, x / big**2)
    tangent /= abs(tangent)
    direction = phase * (complex(b) - complex(a))
    direction /= abs(direction)
    sine = (np.conj(tangent) * direction).imag
    return abs(sine) <= tol
