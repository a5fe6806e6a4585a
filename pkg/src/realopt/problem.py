"""Problem container shared by the engine, benchmark and engineering suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .space import SearchSpace


@dataclass(frozen=True, eq=False)
class Problem:
    """A minimization task: objective over a search space.

    ``f_min``/``x_min`` hold the reference optimum where one is known,
    for reporting and testing only; the engine never reads them.
    """

    problem_id: str
    space: SearchSpace
    objective: Callable[[np.ndarray], float]
    f_min: float | None = None
    x_min: np.ndarray | None = None
    info: dict = field(default_factory=dict)

    @property
    def ndim(self) -> int:
        return self.space.ndim

    def __repr__(self):
        return f"Problem({self.problem_id!r}, ndim={self.ndim})"
