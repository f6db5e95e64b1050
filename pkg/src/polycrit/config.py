"""Tolerance defaults shared across the package.

Matrix tolerances are relative to the Frobenius norm of the operand
unless a docstring says otherwise; planar-geometry tolerances are
relative to the spread (max pairwise distance) of the input points.
Everything lives in one record so there is a single tuning point.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # linear algebra, relative to the Frobenius norm
    hermitian_input: float = 1e-10
    eig_residual: float = 1e-10
    eigval_residual: float = 1e-8
    unitarity: float = 1e-10
    normality: float = 1e-8
    # absolute eigenvalue-gap threshold below which a top eigenspace is
    # treated as degenerate (flat boundary segment)
    degenerate_gap: float = 1e-10

    # verification defaults; the CLI can override per category
    match: float = 1e-6
    geometry: float = 1e-7
    linalg: float = 1e-8
    membership_slack: float = 1e-8
    trace_defect: float = 1e-8

    # rootfinding
    newton_step: float = 1e-14
    min_leading: float = 1e-300

    # planar geometry, relative to point spread
    dedup: float = 1e-10
    collinear: float = 1e-10


TOL = Tolerances()

DEFAULT_SWEEP_SAMPLES = 720
