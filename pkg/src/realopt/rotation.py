"""Random orthogonal matrices and the normalized-space rotation transform."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .space import SearchSpace

ORTHOGONALITY_TOL = 1e-10
DEGENERATE_COLUMN_TOL = 1e-12


@dataclass(frozen=True)
class RotationMatrix:
    """An orthogonal matrix, validated on construction."""

    entries: np.ndarray

    def __post_init__(self):
        m = self.entries
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise ValueError("rotation matrix must be square and non-empty")
        deviation = np.max(np.abs(m.T @ m - np.eye(m.shape[0])))
        if deviation >= ORTHOGONALITY_TOL:
            raise ValueError(f"matrix is not orthogonal (max|M'M - I| = {deviation:.3e})")
        self.entries.setflags(write=False)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class RotationPool:
    """Immutable collection of same-dimension rotation matrices."""

    matrices: tuple
    dimension: int

    def __post_init__(self):
        if len(self.matrices) < 1:
            raise ValueError("pool must hold at least one matrix")
        if any(m.n != self.dimension for m in self.matrices):
            raise ValueError("all pool matrices must share one dimension")

    def __len__(self):
        return len(self.matrices)

    def pick(self, rng: np.random.Generator) -> RotationMatrix:
        """Uniformly random member."""
        return self.matrices[int(rng.integers(len(self.matrices)))]


def generate_orthogonal_matrix(n: int, rng: np.random.Generator) -> RotationMatrix:
    """Random orthogonal matrix: Gaussian draws, Gram-Schmidt columns.

    Each column is projected against the finished ones twice (the second
    sweep keeps orthogonality near machine precision at large n).
    Columns with near-zero residual norm (< 1e-12) are redrawn, a
    probability-zero event under Gaussian sampling. Determinant may be +1
    or -1; reflections serve the same role as proper rotations here.
    """
    if n < 1:
        raise ValueError(f"matrix dimension must be >= 1, got {n}")
    raw = rng.standard_normal((n, n))
    q = np.empty_like(raw)
    for j in range(n):
        v = raw[:, j].copy()
        while True:
            done = q[:, :j]
            for _ in range(2 if j else 1):
                v = v - done @ (done.T @ v)
            norm = float(np.linalg.norm(v))
            if norm >= DEGENERATE_COLUMN_TOL:
                break
            v = rng.standard_normal(n)
        q[:, j] = v / norm
    return RotationMatrix(q)


def build_pool(n: int, count: int, rng: np.random.Generator) -> RotationPool:
    """Pre-generate ``count`` rotation matrices for reuse within a run."""
    if count < 1:
        raise ValueError("pool size must be >= 1")
    return RotationPool(tuple(generate_orthogonal_matrix(n, rng) for _ in range(count)), n)


def normalize(x, center, r) -> np.ndarray:
    """Map a point into [-1, 1]^n coordinates about the center."""
    return (np.asarray(x, dtype=float) - center) / r


def denormalize(z, center, r) -> np.ndarray:
    """Inverse of :func:`normalize`."""
    return np.asarray(z, dtype=float) * r + center


def rotate(x, matrix: RotationMatrix, center, space: SearchSpace) -> np.ndarray:
    """Rotate a feasible point about a center in normalized coordinates.

    Computes the projection of ``x + I_r (M - I) I_r^{-1} (x - center)``
    into the box. The difference form keeps an identity matrix an exact
    no-op on feasible points.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[0] != space.ndim or matrix.n != space.ndim:
        raise ValueError("point, matrix and space dimensions do not match")
    r = space.radius(center)
    z = normalize(x, center, r)
    rotated = x + r * (matrix.entries @ z - z)
    return space.project(rotated)
