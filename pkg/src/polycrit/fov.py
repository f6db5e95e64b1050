"""Field of values (numerical range): support sweep, membership, the
determinant form of the boundary curve, and the 2x2 elliptical case.

The support function of F(a) in direction exp(i*theta) is the largest
eigenvalue of

    H(theta) = (exp(-i*theta) a + exp(i*theta) a*) / 2
             = H1 cos(theta) + H2 sin(theta),

with H1 = (a + a*)/2 and H2 = (a - a*)/(2i). A top eigenvector x gives
the boundary point x* a x, whose projection Re(exp(-i*theta) x* a x)
equals the support value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_SWEEP_SAMPLES, TOL
from .errors import NumericalError
from .numlin import adjoint, as_square


@dataclass(frozen=True)
class EllipseParams:
    """A possibly degenerate ellipse: coincident foci give a circle,
    zero minor semi-axis gives a segment."""

    focus1: complex
    focus2: complex
    minor_semi_axis: float
    center: complex
    major_semi_axis: float
    rotation: float

    def __post_init__(self):
        guard = 1e-10 * (1.0 + self.major_semi_axis**2)
        if abs(self.center - (self.focus1 + self.focus2) / 2.0) > math.sqrt(guard):
            raise ValueError("center must be the focus midpoint")
        gap = self.major_semi_axis**2 - self.minor_semi_axis**2 - abs(self.focus1 - self.focus2) ** 2 / 4.0
        if abs(gap) > guard:
            raise ValueError("axis lengths inconsistent with focal distance")
        if self.minor_semi_axis < 0.0:
            raise ValueError("minor semi-axis must be nonnegative")


def ellipse_from_foci(f1: complex, f2: complex, minor_semi_axis: float) -> EllipseParams:
    """EllipseParams from the foci and the minor semi-axis.

    Foci are ordered lexicographically by (re, im) and the rotation is
    arg(focus2 - focus1) in (-pi, pi], zero for coincident foci, which
    pins a deterministic representation.
    """
    a, b = complex(f1), complex(f2)
    if (b.real, b.imag) < (a.real, a.imag):
        a, b = b, a
    center = (a + b) / 2.0
    half_focal = abs(b - a) / 2.0
    major = math.hypot(minor_semi_axis, half_focal)
    rotation = 0.0 if b == a else math.atan2((b - a).imag, (b - a).real)
    return EllipseParams(a, b, float(minor_semi_axis), center, major, rotation)


def ellipse_support(e: EllipseParams, theta):
    """Support function of the (possibly degenerate) elliptical disk in
    direction exp(i*theta); ``theta`` may be an ndarray."""
    th = np.asarray(theta, dtype=float)
    rel = th - e.rotation
    radial = np.sqrt(
        (e.major_semi_axis * np.cos(rel)) ** 2 + (e.minor_semi_axis * np.sin(rel)) ** 2
    )
    base = np.real(np.exp(-1j * th) * e.center)
    out = base + radial
    return float(out) if out.ndim == 0 else out


def ellipse_points(e: EllipseParams, count: int = 256) -> np.ndarray:
    """Parametric boundary samples, counterclockwise."""
    t = 2.0 * np.pi * np.arange(count) / count
    phase = cmath.exp(1j * e.rotation)
    return e.center + phase * (e.major_semi_axis * np.cos(t) + 1j * e.minor_semi_axis * np.sin(t))


def hermitian_parts(a) -> tuple[np.ndarray, np.ndarray]:
    m = as_square(a)
    return (m + adjoint(m)) / 2.0, (m - adjoint(m)) / 2.0j


def direction_matrix(a, theta: float) -> np.ndarray:
    """H(theta), whose top eigenvalue is the support value of F(a)."""
    m = as_square(a)
    phase = cmath.exp(-1j * theta)
    return (phase * m + np.conj(phase) * adjoint(m)) / 2.0


def _tangential_extreme(a: np.ndarray, theta: float, w: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Top eigenvector choice for a degenerate top eigenspace: the point
    of the flat boundary segment extreme in the forward tangential
    direction, so sweeps traverse flat edges monotonically."""
    sub = v[:, w >= w[-1] - TOL.degenerate_gap]
    phase = cmath.exp(-1j * theta)
    k = (phase * a - np.conj(phase) * adjoint(a)) / 2.0j
    kv = sub.conj().T @ k @ sub
    _, kvecs = np.linalg.eigh((kv + kv.conj().T) / 2.0)
    x = sub @ kvecs[:, -1]
    return x / np.linalg.norm(x)


def support_point(a, theta: float) -> tuple[float, complex]:
    """Support value of F(a) in direction exp(i*theta) and a boundary
    point attaining it."""
    m = as_square(a)
    try:
        w, v = np.linalg.eigh(direction_matrix(m, theta))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"support eigensolver failed: {exc}") from exc
    if w.size > 1 and w[-1] - w[-2] < TOL.degenerate_gap:
        x = _tangential_extreme(m, theta, w, v)
    else:
        x = v[:, -1]
    return float(w[-1]), complex(x.conj() @ m @ x)


@dataclass(frozen=True)
class BoundaryPolyline:
    """Support sweep of the boundary: angles, support values, boundary
    points, and per-sample flags marking degenerate (flat-segment) tops.

    Validated on construction: angles strictly increasing, at least 3
    samples, and Re(exp(-i*theta) b) equal to the support value within
    1e-9 * (1 + |support|)."""

    thetas: np.ndarray
    support_values: np.ndarray
    boundary_points: np.ndarray
    flat_flags: np.ndarray

    def __post_init__(self):
        if self.thetas.size < 3:
            raise ValueError("at least 3 samples required")
        if not np.all(np.diff(self.thetas) > 0):
            raise ValueError("angles must be strictly increasing")
        residual = np.abs(
            np.real(np.exp(-1j * self.thetas) * self.boundary_points) - self.support_values
        )
        if np.any(residual > 1e-9 * (1.0 + np.abs(self.support_values))):
            raise ValueError("boundary points inconsistent with support values")


def _direction_stack(a: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    phase = np.exp(-1j * thetas)
    return (phase[:, None, None] * a[None, :, :] + np.conj(phase)[:, None, None] * adjoint(a)[None, :, :]) / 2.0


def sweep_supports(a, thetas) -> np.ndarray:
    """Support values at many angles (batched eigenvalue solve)."""
    m = as_square(a)
    th = np.atleast_1d(np.asarray(thetas, dtype=float))
    try:
        w = np.linalg.eigvalsh(_direction_stack(m, th))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"support eigensolver failed: {exc}") from exc
    return w[:, -1]


def boundary_polyline(a, m: int = DEFAULT_SWEEP_SAMPLES) -> BoundaryPolyline:
    """Support sweep at the uniform grid theta_k = 2 pi k / m."""
    mat = as_square(a)
    if m < 8:
        raise ValueError("at least 8 samples required")
    n = mat.shape[0]
    thetas = 2.0 * np.pi * np.arange(m) / m
    try:
        w, v = np.linalg.eigh(_direction_stack(mat, thetas))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"support eigensolver failed: {exc}") from exc
    supports = w[:, -1].copy()
    x = v[:, :, -1]
    points = np.einsum("ki,ij,kj->k", x.conj(), mat, x)
    if n > 1:
        flats = (w[:, -1] - w[:, -2]) < TOL.degenerate_gap
        for k in np.flatnonzero(flats):
            supports[k], points[k] = support_point(mat, float(thetas[k]))
    else:
        flats = np.zeros(m, dtype=bool)
    return BoundaryPolyline(thetas, supports, points, flats)


def point_margin(thetas, supports, z: complex) -> float:
    """Largest violation of the sampled supporting half-planes by ``z``.

    Nonpositive means the point satisfies all sampled constraints; the
    sampled test is an outer approximation of membership in the convex
    set, so a positive margin certifies exteriority."""
    th = np.asarray(thetas, dtype=float)
    return float(np.max(np.real(np.exp(-1j * th) * z) - np.asarray(supports)))


def contains_point(a, z, m: int = DEFAULT_SWEEP_SAMPLES, slack: float = TOL.membership_slack) -> bool:
    """Sampled outer membership test of z in F(a)."""
    if m < 8:
        raise ValueError("at least 8 samples required")
    thetas = 2.0 * np.pi * np.arange(m) / m
    return point_margin(thetas, sweep_supports(a, thetas), complex(z)) <= slack


def kippenhahn_eval(a, u: float, v: float, w: float) -> complex:
    """det(H1 u + H2 v + w I), the defining form of the boundary curve's
    tangent lines: it vanishes when u x + v y + w = 0 supports F(a).

    Computed by LU factorization with partial pivoting; the result is
    real up to roundoff for real (u, v, w) since the matrix is Hermitian.
    """
    m = as_square(a)
    h1, h2 = hermitian_parts(m)
    stack = h1 * u + h2 * v + w * np.eye(m.shape[0])
    return complex(np.linalg.det(stack))


def elliptical_range(a) -> EllipseParams:
    """Exact description of F(a) for a 2x2 matrix: an elliptical disk
    with the eigenvalues as foci and minor semi-axis
    sqrt(trace(a* a) - |l1|^2 - |l2|^2) / 2."""
    m = as_square(a)
    if m.shape[0] != 2:
        raise ValueError("order-2 matrix required")
    tr = complex(m[0, 0] + m[1, 1])
    det = complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    sq = cmath.sqrt(tr * tr - 4.0 * det)
    lam1 = (tr + sq) / 2.0 if abs(tr + sq) >= abs(tr - sq) else (tr - sq) / 2.0
    lam2 = det / lam1 if lam1 != 0 else tr - lam1
    gram = float(np.sum(np.abs(m) ** 2))
    radicand = gram - abs(lam1) ** 2 - abs(lam2) ** 2
    if radicand < -1e-12 * (1.0 + gram):
        raise NumericalError("negative minor-axis radicand")
    minor = 0.5 * math.sqrt(max(radicand, 0.0))
    return ellipse_from_foci(lam1, lam2, minor)
