"""Search-space geometry: box bounds, projection, and discrete grids."""

from __future__ import annotations

from typing import Sequence

import numpy as np


class SearchSpace:
    """Axis-aligned box, optionally with per-dimension discrete value grids.

    Parameters
    ----------
    lower, upper : array_like
        Per-dimension bounds, lower[i] < upper[i].
    grids : sequence of (array_like or None), optional
        For each dimension either None (continuous) or a sorted list of
        admissible values lying inside the bounds (length >= 2).
    """

    def __init__(self, lower, upper, grids: Sequence | None = None):
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)
        if self.lower.ndim != 1 or self.lower.shape != self.upper.shape:
            raise ValueError("lower and upper must be 1-D arrays of equal length")
        if self.lower.size == 0:
            raise ValueError("search space needs at least one dimension")
        if not np.all(self.lower < self.upper):
            raise ValueError("each lower bound must be strictly below its upper bound")
        if grids is None:
            self.grids = tuple(None for _ in range(self.lower.size))
        else:
            if len(grids) != self.lower.size:
                raise ValueError("grids must list one entry per dimension")
            cleaned = []
            for i, grid in enumerate(grids):
                if grid is None:
                    cleaned.append(None)
                    continue
                values = np.asarray(grid, dtype=float)
                if values.size < 2:
                    raise ValueError(f"discrete grid for dimension {i} needs >= 2 values")
                if np.any(np.diff(values) <= 0):
                    raise ValueError(f"discrete grid for dimension {i} must be strictly increasing")
                if values[0] < self.lower[i] or values[-1] > self.upper[i]:
                    raise ValueError(f"discrete grid for dimension {i} exceeds the bounds")
                cleaned.append(values)
            self.grids = tuple(cleaned)
        self.continuous_mask = np.array([g is None for g in self.grids])

    # -- basic queries ---------------------------------------------------

    @property
    def ndim(self) -> int:
        return self.lower.size

    @property
    def has_discrete(self) -> bool:
        return not bool(self.continuous_mask.all())

    def center(self) -> np.ndarray:
        """Midpoint of the box."""
        return 0.5 * (self.lower + self.upper)

    def span_norm(self) -> float:
        """Euclidean length of the box diagonal, ||upper - lower||."""
        return float(np.linalg.norm(self.upper - self.lower))

    def contains(self, x, tol: float = 0.0) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower - tol) and np.all(x <= self.upper + tol))

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        """Uniform point in the box (continuous, not snapped)."""
        return self.lower + rng.random(self.ndim) * (self.upper - self.lower)

    # -- geometry operations ----------------------------------------------

    def project(self, x) -> np.ndarray:
        """Clamp every element into its closed interval; idempotent."""
        return np.clip(np.asarray(x, dtype=float), self.lower, self.upper)

    def radius(self, center) -> np.ndarray:
        """Per-dimension radius max(upper - c, c - lower) about a center."""
        center = np.asarray(center, dtype=float)
        if center.shape != self.lower.shape:
            raise ValueError("center dimension does not match the space")
        if not self.contains(center):
            raise ValueError("rotation center lies outside the bounds")
        return np.maximum(self.upper - center, center - self.lower)

    def snap(self, x) -> np.ndarray:
        """Replace each discrete element by its nearest grid value.

        Exact midpoints go to the upper neighbour. Continuous dimensions
        pass through unchanged.
        """
        x = np.asarray(x, dtype=float).copy()
        for i, grid in enumerate(self.grids):
            if grid is None:
                continue
            j = int(np.searchsorted(grid, x[i]))
            if j <= 0:
                x[i] = grid[0]
            elif j >= grid.size:
                x[i] = grid[-1]
            else:
                below, above = grid[j - 1], grid[j]
                x[i] = below if (x[i] - below) < (above - x[i]) else above
        return x

    def grid_neighbor(self, x, dim: int, direction: int) -> float:
        """Value of the adjacent grid point in the given direction.

        Returns the current snapped value when the move would leave the
        grid (at an endpoint the single neighbour exists on one side only).
        """
        grid = self.grids[dim]
        if grid is None:
            raise ValueError(f"dimension {dim} is continuous")
        j = int(np.argmin(np.abs(grid - x[dim])))
        j2 = j + (1 if direction > 0 else -1)
        if 0 <= j2 < grid.size:
            return float(grid[j2])
        return float(grid[j])

    def __repr__(self):
        kinds = "".join("c" if g is None else "d" for g in self.grids)
        return f"SearchSpace(ndim={self.ndim}, kinds={kinds!r})"


def project(x, space: SearchSpace) -> np.ndarray:
    """Interval projection of a point into the box."""
    return space.project(x)


def radius(center, space: SearchSpace) -> np.ndarray:
    """Per-dimension rotation radius about a feasible center."""
    return space.radius(center)


def snap_discrete(x, space: SearchSpace) -> np.ndarray:
    """Snap discrete elements to their nearest grid values (ties go up)."""
    return space.snap(x)
