"""Executable checkers for the classical critical-point location
theorems, each returning a structured verdict with numeric evidence.

A checker never conflates a violated hypothesis with a counterexample:
the verdict is one of ``pass``, ``fail``, ``preconditions_unmet``. The
critical-point reference in every checker except ``check_main_theorem``
is the companion-matrix rootfinder applied to the derivative, so the
two sides of each comparison are computed along independent routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fov, geom, matricial, numlin, poly
from .config import DEFAULT_SWEEP_SAMPLES, TOL

PASS = "pass"
FAIL = "fail"
PRECONDITIONS_UNMET = "preconditions_unmet"


@dataclass(frozen=True)
class CheckReport:
    theorem: str
    verdict: str
    max_violation: float
    details: tuple[tuple[str, object], ...]
    tolerances_used: dict[str, float]


@dataclass(frozen=True)
class SiebeckHypotheses:
    """Computed (never assumed) hypotheses for the midpoint-tangency
    statement: every hull vertex is a simple zero, and every hull edge
    has all remaining zeros strictly on its inner side.
    ``vertex_indices`` lists the 1-based zero indices of each hull edge's
    endpoints."""

    simple_vertex_eigenvalues: bool
    strict_half_plane: bool
    vertex_indices: tuple[tuple[int, int], ...]


def _as_zeros(zeros) -> np.ndarray:
    z = np.atleast_1d(np.asarray(zeros, dtype=complex))
    if z.size == 0:
        raise ValueError("empty zero set")
    if not np.all(np.isfinite(z)):
        raise ValueError("zeros must be finite")
    return z


def critical_points_oracle(zeros) -> np.ndarray:
    """Roots of p' for monic p with the given zeros, via the companion
    matrix plus Newton polish. Independent of the submatrix route."""
    return poly.roots(poly.derivative(poly.from_roots(_as_zeros(zeros))))


def _precond(theorem: str, reason: str, tols: dict[str, float], extra=()) -> CheckReport:
    details = (("unmet_hypothesis", reason),) + tuple(extra)
    return CheckReport(theorem, PRECONDITIONS_UNMET, math.nan, details, tols)


def check_main_theorem(zeros, tol: float = TOL.match) -> CheckReport:
    """Critical points of p match the spectrum of every principal
    submatrix of A = U D U*, as multisets within ``tol``."""
    z = _as_zeros(zeros)
    tols = {"match": tol}
    if z.size < 2:
        return _precond("main", "need at least 2 zeros", tols)
    oracle = critical_points_oracle(z)
    worst = 0.0
    all_matched = True
    for i in range(1, z.size + 1):
        pts = matricial.critical_points_matricial(z, i)
        report = poly.multiset_match(pts, oracle, tol)
        worst = max(worst, report.max_distance)
        all_matched = all_matched and report.matched
    details = (
        ("submatrices_checked", z.size),
        ("max_matched_distance", worst),
    )
    return CheckReport("main", PASS if all_matched else FAIL, worst, details, tols)


def check_gauss_lucas(zeros, tol: float = TOL.geometry) -> CheckReport:
    """Every critical point lies in the convex hull of the zeros, within
    signed distance ``tol``."""
    z = _as_zeros(zeros)
    tols = {"geometry": tol}
    if z.size < 2:
        return _precond("gauss-lucas", "need at least 2 zeros", tols)
    hull = geom.convex_hull(z, tol=1e-12)
    crit = critical_points_oracle(z)
    violations = [geom.hull_violation(hull, c) for c in crit]
    worst = float(max(violations))
    details = (
        ("hull_vertices", int(hull.vertices.size)),
        ("critical_points", int(crit.size)),
        ("worst_signed_distance", worst),
    )
    return CheckReport("gauss-lucas", PASS if worst <= tol else FAIL, worst, details, tols)


def check_interlacing(zeros, tol: float = TOL.linalg) -> CheckReport:
    """For real zeros sorted descending, critical points separate the
    zeros: lam_k >= mu_k >= lam_{k+1}, each within ``tol``."""
    z = _as_zeros(zeros)
    tols = {"linalg": tol}
    if z.size < 2:
        return _precond("interlacing", "need at least 2 zeros", tols)
    imag_max = float(np.max(np.abs(z.imag)))
    if imag_max > 1e-12:
        return _precond(
            "interlacing", "zeros are not real", tols, (("max_imag", imag_max),)
        )
    lam = np.sort(z.real)[::-1]
    mu = np.sort(critical_points_oracle(z).real)[::-1]
    worst = 0.0
    for k in range(mu.size):
        worst = max(worst, mu[k] - lam[k], lam[k + 1] - mu[k])
    details = (("worst_gap", worst),)
    return CheckReport("interlacing", PASS if worst <= tol else FAIL, worst, details, tols)


def check_siebeck_hypotheses(zeros, tol: float = TOL.geometry) -> SiebeckHypotheses:
    """Evaluate the two tangency hypotheses on the hull of the zeros.

    ``tol`` is relative to the spread of the zeros: it is both the
    clustering radius for vertex multiplicity and the required strict
    half-plane margin. Raises if the hull has fewer than 3 vertices.
    """
    z = _as_zeros(zeros)
    if z.size < 3:
        raise ValueError("need at least 3 zeros")
    hull = geom.convex_hull(z, tol=1e-12)
    verts = hull.vertices
    if verts.size < 3:
        raise ValueError("fewer than 3 hull vertices")
    scale = geom.point_spread(z)
    radius = tol * scale

    simple = True
    rep: list[int] = []  # 1-based index of the zero at each hull vertex
    for v in verts:
        dists = np.abs(z - v)
        close = np.flatnonzero(dists <= radius)
        if close.size != 1:
            simple = False
        rep.append(int(np.argmin(dists)) + 1)

    strict = True
    pairs: list[tuple[int, int]] = []
    n = verts.size
    for k in range(n):
        a, b = complex(verts[k]), complex(verts[(k + 1) % n])
        i, j = rep[k], rep[(k + 1) % n]
        pairs.append((i, j))
        normal = -1j * (b - a)
        normal /= abs(normal)
        for idx in range(z.size):
            if idx + 1 in (i, j):
                continue
            signed = (np.conj(normal) * (z[idx] - a)).real
            if signed > -tol * scale:
                strict = False
    return SiebeckHypotheses(simple, strict, tuple(pairs))


def _hull_supports(zeros: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    return np.max(np.real(np.exp(-1j * thetas)[:, None] * zeros[None, :]), axis=1)


def _edge_fan(theta_e: float) -> np.ndarray:
    """Support angles refined geometrically around an edge normal.

    Margins of points near a tangency are attained at angles close to
    the edge normal; geometric spacing resolves the optimum with a
    relative error independent of how flat the boundary is there. The
    resulting membership test stays an outer (sound) certificate.
    """
    offsets = np.geomspace(1e-6, 0.7, 48)
    return theta_e + np.concatenate([-offsets[::-1], [0.0], offsets])


def check_poor_mans_siebeck(
    zeros,
    m: int = DEFAULT_SWEEP_SAMPLES,
    tol: float = TOL.geometry,
    hyp_tol: float = TOL.geometry,
    probes_per_edge: int = 41,
) -> CheckReport:
    """The field of values of the first principal submatrix is contained
    in the hull of the zeros, touches every hull edge exactly at its
    midpoint, and stays clear of each edge outside the 5% neighborhood
    of the midpoint by more than ``tol``."""
    z = _as_zeros(zeros)
    tols = {"geometry": tol, "hypotheses": hyp_tol}
    if z.size < 3:
        return _precond("siebeck", "need at least 3 zeros", tols)
    try:
        hyp = check_siebeck_hypotheses(z, hyp_tol)
    except ValueError as exc:
        return _precond("siebeck", str(exc), tols)
    if not (hyp.simple_vertex_eigenvalues and hyp.strict_half_plane):
        return _precond(
            "siebeck",
            "hypothesis flags not satisfied",
            tols,
            (
                ("simple_vertex_eigenvalues", hyp.simple_vertex_eigenvalues),
                ("strict_half_plane", hyp.strict_half_plane),
            ),
        )

    built = matricial.build_construction(z)
    sub = numlin.principal_submatrix(built.A, 1)
    thetas = 2.0 * np.pi * np.arange(m) / m
    sub_supports = fov.sweep_supports(sub, thetas)
    containment_excess = float(np.max(sub_supports - _hull_supports(z, thetas)))

    hull = geom.convex_hull(z, tol=1e-12)
    verts = hull.vertices
    tangency_gap = 0.0
    midpoint_excess = -math.inf
    uniqueness_margin = math.inf
    for k in range(verts.size):
        a, b = complex(verts[k]), complex(verts[(k + 1) % verts.size])
        normal = -1j * (b - a)
        normal /= abs(normal)
        theta_e = math.atan2(normal.imag, normal.real)
        edge_support = (np.conj(normal) * a).real
        fan = _edge_fan(theta_e)
        fan_supports = fov.sweep_supports(sub, fan)
        sub_at_edge = float(fan_supports[fan.size // 2])  # the fan center is theta_e
        tangency_gap = max(tangency_gap, abs(sub_at_edge - edge_support))
        mid = (a + b) / 2.0
        midpoint_excess = max(
            midpoint_excess,
            fov.point_margin(thetas, sub_supports, mid),
            fov.point_margin(fan, fan_supports, mid),
        )
        for p in range(probes_per_edge):
            t = p / (probes_per_edge - 1)
            if abs(t - 0.5) <= 0.05:
                continue
            probe = a + t * (b - a)
            margin = max(
                fov.point_margin(thetas, sub_supports, probe),
                fov.point_margin(fan, fan_supports, probe),
            )
            uniqueness_margin = min(uniqueness_margin, margin)

    worst = max(containment_excess, tangency_gap, midpoint_excess)
    ok = worst <= tol and uniqueness_margin > tol
    details = (
        ("containment_excess", containment_excess),
        ("tangency_gap", tangency_gap),
        ("midpoint_excess", midpoint_excess),
        ("uniqueness_min_margin", uniqueness_margin),
        ("hull_vertices", int(verts.size)),
    )
    return CheckReport("siebeck", PASS if ok else FAIL, worst, details, tols)


def check_bgm(zeros, tol: float = TOL.geometry) -> CheckReport:
    """The foci of the inscribed midpoint-tangent ellipse of the triangle
    of zeros coincide with the critical points, and the tangency holds on
    all three sides."""
    z = _as_zeros(zeros)
    tols = {"geometry": tol}
    if z.size != 3:
        return _precond("bgm", "exactly 3 zeros required", tols)
    try:
        ellipse = geom.steiner_inellipse(z[0], z[1], z[2])
    except ValueError as exc:
        return _precond("bgm", str(exc), tols)
    crit = critical_points_oracle(z)
    match = poly.multiset_match(np.array([ellipse.focus1, ellipse.focus2]), crit, tol)
    tangent_all = True
    try:
        for k in range(3):
            if not geom.ellipse_tangency_check(ellipse, z[k], z[(k + 1) % 3], tol):
                tangent_all = False
    except ValueError as exc:
        return _precond("bgm", f"inellipse degenerate: {exc}", tols)
    ok = match.matched and tangent_all
    details = (
        ("foci_match_distance", match.max_distance),
        ("tangent_all_sides", tangent_all),
    )
    return CheckReport("bgm", PASS if ok else FAIL, match.max_distance, details, tols)


def check_elliptical_range(a, m: int = DEFAULT_SWEEP_SAMPLES, tol: float = TOL.match) -> CheckReport:
    """Support sweep of a 2x2 matrix against the closed-form elliptical
    disk. One-sided Hausdorff distances between the two convex sets are
    the positive parts of the support-function differences, sampled over
    the sweep grid; a degenerate ellipse reduces to the support of the
    two-point focus set automatically."""
    mat = numlin.as_square(a)
    tols = {"match": tol}
    if mat.shape[0] != 2:
        return _precond("elliptical-range", "order-2 matrix required", tols)
    ellipse = fov.elliptical_range(mat)
    polyline = fov.boundary_polyline(mat, m)
    he = fov.ellipse_support(ellipse, polyline.thetas)
    sweep_excess = float(max(np.max(polyline.support_values - he), 0.0))
    ellipse_excess = float(max(np.max(he - polyline.support_values), 0.0))
    scale = 1.0 + numlin.frobenius(mat)
    worst = max(sweep_excess, ellipse_excess)
    details = (
        ("sweep_outside_ellipse", sweep_excess),
        ("ellipse_outside_sweep", ellipse_excess),
        ("minor_semi_axis", ellipse.minor_semi_axis),
        ("scale", scale),
    )
    verdict = PASS if worst <= tol * scale else FAIL
    return CheckReport("elliptical-range", verdict, worst, details, tols)


def check_edge_preimage(
    zeros,
    edge: tuple[int, int],
    samples: int = 101,
    tol: float = TOL.geometry,
    m: int = DEFAULT_SWEEP_SAMPLES,
    slack: float = TOL.membership_slack,
    hyp_tol: float = TOL.geometry,
) -> CheckReport:
    """Probe a hull edge: the only probed points of the edge segment that
    belong to the field of values of the first principal submatrix are
    those within ``tol`` of the midpoint (in units of the edge length).

    ``edge`` is a pair of 1-based indices into the zeros that must name
    a hull edge satisfying the tangency hypotheses.
    """
    z = _as_zeros(zeros)
    tols = {"geometry": tol, "membership_slack": slack, "hypotheses": hyp_tol}
    if z.size < 3:
        return _precond("edge-preimage", "need at least 3 zeros", tols)
    if samples < 3:
        raise ValueError("need at least 3 probes")
    try:
        hyp = check_siebeck_hypotheses(z, hyp_tol)
    except ValueError as exc:
        return _precond("edge-preimage", str(exc), tols)
    if not (hyp.simple_vertex_eigenvalues and hyp.strict_half_plane):
        return _precond("edge-preimage", "hypothesis flags not satisfied", tols)
    pair = (int(edge[0]), int(edge[1]))
    if pair not in hyp.vertex_indices and pair[::-1] not in hyp.vertex_indices:
        return _precond("edge-preimage", f"{pair} is not a hull edge", tols)

    built = matricial.build_construction(z)
    sub = numlin.principal_submatrix(built.A, 1)
    thetas = 2.0 * np.pi * np.arange(m) / m
    supports = fov.sweep_supports(sub, thetas)
    a, b = complex(z[pair[0] - 1]), complex(z[pair[1] - 1])
    normal = -1j * (b - a)
    normal /= abs(normal)
    fan = _edge_fan(math.atan2(normal.imag, normal.real))
    fan_supports = fov.sweep_supports(sub, fan)
    params = np.arange(samples) / (samples - 1)
    members = []
    for t in params:
        probe = a + t * (b - a)
        margin = max(
            fov.point_margin(thetas, supports, probe),
            fov.point_margin(fan, fan_supports, probe),
        )
        members.append(margin <= slack)
    members = np.asarray(members)
    target = np.abs(params - 0.5) <= tol
    agree = bool(np.array_equal(members, target))
    worst = float(np.max(np.abs(params - 0.5)[members])) if np.any(members) else 0.0
    details = (
        ("member_count", int(np.count_nonzero(members))),
        ("expected_count", int(np.count_nonzero(target))),
        ("worst_member_offset", worst),
    )
    return CheckReport("edge-preimage", PASS if agree else FAIL, worst, details, tols)
