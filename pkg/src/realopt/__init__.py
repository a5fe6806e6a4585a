"""realopt: a rotation-excursion stochastic optimizer with benchmark and
engineering problem suites and a reproducible experiment harness."""

from .engine import (
    RealParams,
    RunRecord,
    VisibleSpotList,
    learning_efficiency,
    perturbation_amplitude,
    run,
    scaled_learning_efficiency,
)
from .problem import Problem
from .rotation import RotationMatrix, RotationPool, build_pool, generate_orthogonal_matrix, rotate
from .space import SearchSpace, project, radius, snap_discrete

__all__ = [
    "Problem",
    "RealParams",
    "RotationMatrix",
    "RotationPool",
    "RunRecord",
    "SearchSpace",
    "VisibleSpotList",
    "build_pool",
    "generate_orthogonal_matrix",
    "learning_efficiency",
    "perturbation_amplitude",
    "project",
    "radius",
    "rotate",
    "run",
    "scaled_learning_efficiency",
    "snap_discrete",
]

__version__ = "0.1.0"
