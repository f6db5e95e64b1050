"""Complex polynomial arithmetic, rootfinding, and multiset comparison.

Coefficients are stored in ascending degree order with a nonzero leading
coefficient. Root sets are plain complex ndarrays with multiset
semantics: multiplicities are carried by repetition, never by a count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import NumericalError


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Polynomial sum(coeffs[k] * t**k) with coeffs[-1] != 0."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        if abs(c[-1]) == 0.0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __repr__(self):
        return f"Polynomial(degree={self.degree}, coeffs={self.coeffs!r})"


def from_roots(roots) -> Polynomial:
    """Monic polynomial with the given zeros, by incremental expansion."""
    r = np.atleast_1d(np.asarray(roots, dtype=complex))
    if r.size == 0:
        raise ValueError("root set must be nonempty")
    c = np.array([1.0 + 0.0j])
    for z in r:
        c = np.convolve(c, np.array([-z, 1.0 + 0.0j]))
    return Polynomial(c)


def derivative(p: Polynomial) -> Polynomial:
    """Formal derivative; rejects constants (the result would be zero)."""
    if p.degree < 1:
        raise ValueError("cannot differentiate a degree-0 polynomial")
    k = np.arange(1, p.degree + 1)
    return Polynomial(p.coeffs[1:] * k)


def evaluate(p: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an ndarray."""
    zz = np.asarray(z, dtype=complex)
    out = np.zeros_like(zz)
    for c in p.coeffs[::-1]:
        out = out * zz + c
    if out.ndim == 0:
        return complex(out)
    return out


def _horner(coeffs: np.ndarray, z: complex) -> complex:
    out = 0.0 + 0.0j
    for c in coeffs[::-1]:
        out = out * z + c
    return out


def _newton_polish(coeffs: np.ndarray, dcoeffs: np.ndarray, z: complex) -> complex:
    """Up to 20 damped Newton steps on a monic coefficient array.

    The step is halved while |p| does not decrease; iteration stops once
    the accepted step falls below ``TOL.newton_step * (1 + |z|)``.
    """
    pz = _horner(coeffs, z)
    for _ in range(20):
        dz = _horner(dcoeffs, z)
        if dz == 0:
            break
        step = pz / dz
        trial = z - step
        ptrial = _horner(coeffs, trial)
        halvings = 0
        while abs(ptrial) >= abs(pz) and halvings < 8:
            step *= 0.5
            trial = z - step
            ptrial = _horner(coeffs, trial)
            halvings += 1
        if abs(ptrial) >= abs(pz):
            break
        z, pz = trial, ptrial
        if abs(step) < TOL.newton_step * (1.0 + abs(z)):
            break
    return z


def _monic_coeffs(p: Polynomial) -> np.ndarray:
    lead = p.coeffs[-1]
    if abs(lead) < TOL.min_leading:
        raise NumericalError("leading coefficient too small to normalize")
    return p.coeffs / lead


def companion_matrix(p: Polynomial) -> np.ndarray:
    """Companion matrix of the monic normalization of ``p``."""
    if p.degree < 1:
        raise ValueError("degree must be at least 1")
    monic = _monic_coeffs(p)
    deg = p.degree
    comp = np.zeros((deg, deg), dtype=complex)
    if deg > 1:
        comp[np.arange(1, deg), np.arange(deg - 1)] = 1.0
    comp[:, -1] = -monic[:-1]
    return comp


def roots(p: Polynomial) -> np.ndarray:
    """All roots with multiplicity: companion-matrix eigenvalues of the
    monic normalization, each polished by damped Newton iteration."""
    if p.degree < 1:
        raise ValueError("degree must be at least 1")
    monic = _monic_coeffs(p)
    deg = p.degree
    if deg == 1:
        return np.array([-monic[0]])
    try:
        raw = np.linalg.eigvals(companion_matrix(p))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"companion eigensolver failed: {exc}") from exc
    dmonic = monic[1:] * np.arange(1, deg + 1)
    return np.array([_newton_polish(monic, dmonic, z) for z in raw])


def min_cost_assignment(cost: np.ndarray) -> list[int]:
    """Assignment minimizing total cost on a square matrix (O(n^3),
    potentials formulation). Returns the column paired with each row."""
    cost = np.asarray(cost, dtype=float)
    n = cost.shape[0]
    if cost.shape != (n, n):
        raise ValueError("cost matrix must be square")
    if n == 0:
        return []
    INF = math.inf
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row assigned to column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = INF
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1, j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    assign = [0] * n
    for j in range(1, n + 1):
        if match[j]:
            assign[match[j] - 1] = j - 1
    return assign


@dataclass(frozen=True)
class MatchReport:
    """Outcome of a multiset comparison under optimal pairing."""

    matched: bool
    max_distance: float
    pairs: tuple[tuple[int, int], ...] | None

    def __bool__(self) -> bool:
        return self.matched


def multiset_match(a, b, tol: float = TOL.match) -> MatchReport:
    """True iff both multisets have equal size and a minimum-total-cost
    perfect matching under |a_i - b_j| pairs every point within ``tol``."""
    aa = np.atleast_1d(np.asarray(a, dtype=complex))
    bb = np.atleast_1d(np.asarray(b, dtype=complex))
    if aa.size != bb.size:
        return MatchReport(False, math.inf, None)
    if aa.size == 0:
        return MatchReport(True, 0.0, ())
    cost = np.abs(aa[:, None] - bb[None, :])
    assign = min_cost_assignment(cost)
    pairs = tuple((i, assign[i]) for i in range(aa.size))
    dmax = float(max(cost[i, j] for i, j in pairs))
    return MatchReport(dmax <= tol, dmax, pairs)
