"""Main optimizer loop: learning schedule, visible-spot memory, and the
rotation / excursion / perturbation operations applied per agent."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace

import numpy as np

from .problem import Problem
from .rng import seeded_stream
from .rotation import build_pool, rotate
from .space import SearchSpace, snap_discrete

__all__ = [
    "RealParams",
    "VisibleSpotList",
    "RunRecord",
    "learning_efficiency",
    "scaled_learning_efficiency",
    "perturbation_amplitude",
    "excursion",
    "perturb",
    "select_spot",
    "choose_rotation_center",
    "run",
]


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class RealParams:
    """Tunables of the optimizer.

    ``final_amp`` is the absolute end-of-run perturbation amplitude; set
    ``final_amp_ratio`` to derive it from the box diagonal instead. The
    initial amplitude is always ``init_amp_ratio * ||upper - lower||``.
    ``term_tol`` stops a run early once the archive's best and worst
    values agree to within the tolerance (0 demands exact equality);
    None, the default, disables early stopping. Rotations about the box
    midpoint preserve a solution's distance from it, so on radially
    symmetric objectives the archive can fill with float-identical
    values long before convergence; spread-based stopping is therefore
    opt-in, used by the sensitivity protocol with 1e-8.
    """

    n_agents: int = 30
    gamma: float = 6.0
    iterations: int = 1000
    pool_size: int = 20
    archive_size: int = 10
    init_amp_ratio: float = 0.5
    final_amp: float = 1e-40
    final_amp_ratio: float | None = None
    perturb_rate: float = 0.1
    excursion_rate: float = 0.5
    term_tol: float | None = None
    seed: int = 0
    roulette: bool = False

    def validate(self):
        if self.n_agents < 1:
            raise ValueError("n_agents must be >= 1")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.pool_size < 1:
            raise ValueError("pool_size must be >= 1")
        if self.archive_size < 1:
            raise ValueError("archive_size must be >= 1")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if not 0.0 <= self.perturb_rate <= 1.0:
            raise ValueError("perturb_rate must lie in [0, 1]")
        if not 0.0 <= self.excursion_rate <= 1.0:
            raise ValueError("excursion_rate must lie in [0, 1]")
        if not 0.0 <= self.init_amp_ratio <= 1.0:
            raise ValueError("init_amp_ratio must lie in [0, 1]")
        if self.final_amp < 0:
            raise ValueError("final_amp must be >= 0")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")

    def initial_amplitude(self, space: SearchSpace) -> float:
        return self.init_amp_ratio * space.span_norm()

    def final_amplitude(self, space: SearchSpace) -> float:
        if self.final_amp_ratio is not None:
            return self.final_amp_ratio * space.span_norm()
        return self.final_amp

    def with_overrides(self, **kwargs) -> "RealParams":
        return replace(self, **kwargs)


# ---------------------------------------------------------------------------
# learning schedule


def learning_efficiency(t: float, iterations: int, gamma: float) -> float:
    """Logistic growth value 1 / (1 + exp((2 gamma / T)(T/2 - t)))."""
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    return 1.0 / (1.0 + math.exp((2.0 * gamma / iterations) * (iterations / 2.0 - t)))


def scaled_learning_efficiency(t: float, iterations: int, gamma: float) -> float:
    """Logistic growth rescaled over its truncated range [-gamma, gamma].

    The engine's schedule: spans exactly [0, 1] across a run so that the
    perturbation amplitude genuinely reaches its configured final value.
    The symmetric form keeps the midpoint value 0.5 float-exact and the
    odd symmetry about T/2.
    """
    high = 1.0 / (1.0 + math.exp(-gamma))
    return 0.5 + (learning_efficiency(t, iterations, gamma) - 0.5) / (2.0 * (high - 0.5))


def perturbation_amplitude(t: float, iterations: int, gamma: float,
                           amp_initial: float, amp_final: float) -> float:
    """Amplitude interpolation L_A0 - (L_A0 - L_AT) * efficiency(t)."""
    if amp_initial < amp_final:
        raise ValueError("initial amplitude must be >= final amplitude")
    eff = scaled_learning_efficiency(t, iterations, gamma)
    return amp_initial - (amp_initial - amp_final) * eff


# ---------------------------------------------------------------------------
# visible-spot memory


class VisibleSpotList:
    """Bounded archive of the lowest-valued solutions offered so far.

    Below capacity every candidate is stored. At capacity a candidate
    must strictly beat the current worst entry, which it then replaces;
    among equal-valued entries the earliest offered is kept.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self.points: list[np.ndarray] = []
        self.values: list[float] = []
        self._arrivals: list[int] = []
        self._counter = 0

    def __len__(self):
        return len(self.values)

    def offer(self, point, value: float) -> bool:
        """Insert the candidate if it qualifies; returns acceptance."""
        self._counter += 1
        if len(self.values) < self.capacity:
            self.points.append(np.array(point, dtype=float))
            self.values.append(float(value))
            self._arrivals.append(self._counter)
            return True
        worst = self._worst_index()
        if value < self.values[worst]:
            self.points[worst] = np.array(point, dtype=float)
            self.values[worst] = float(value)
            self._arrivals[worst] = self._counter
            return True
        return False

    def _worst_index(self) -> int:
        return max(range(len(self.values)), key=lambda i: (self.values[i], self._arrivals[i]))

    def _best_index(self) -> int:
        return min(range(len(self.values)), key=lambda i: (self.values[i], self._arrivals[i]))

    def best(self) -> tuple[np.ndarray, float]:
        i = self._best_index()
        return self.points[i], self.values[i]

    def worst_value(self) -> float:
        return max(self.values)

    def spread(self) -> float:
        return abs(self.worst_value() - self.best()[1])


def offer(archive: VisibleSpotList, candidate, value: float) -> bool:
    """Offer a candidate to the archive; see VisibleSpotList.offer."""
    return archive.offer(candidate, value)


def select_spot(archive: VisibleSpotList, rng: np.random.Generator,
                roulette: bool = False) -> np.ndarray:
    """Pick an archive member, uniformly by default.

    With ``roulette`` the draw is fitness proportional on values shifted
    so the worst entry has zero weight (uniform fallback on ties).
    """
    if len(archive) == 0:
        raise ValueError("cannot select from an empty visible-spot list")
    m = len(archive)
    if not roulette or m == 1:
        return archive.points[int(rng.integers(m))]
    values = np.array(archive.values)
    weights = values.max() - values
    total = weights.sum()
    if total <= 0:
        return archive.points[int(rng.integers(m))]
    return archive.points[int(rng.choice(m, p=weights / total))]


def choose_rotation_center(archive: VisibleSpotList, space: SearchSpace, rho: float,
                           rng: np.random.Generator, roulette: bool = False):
    """Pick the rotation center: space midpoint or an archive member.

    Draws Ran ~ U[0,1]; the midpoint is used when Ran >= rho or the
    archive is empty. Returns (center, used_archive).
    """
    ran = rng.random()
    if ran >= rho or len(archive) == 0:
        return space.center(), False
    return select_spot(archive, rng, roulette=roulette), True


# ---------------------------------------------------------------------------
# operations


def excursion(x, target, rate: float) -> np.ndarray:
    """Convex step from x toward the target: x + rate * (target - x)."""
    x = np.asarray(x, dtype=float)
    target = np.asarray(target, dtype=float)
    return x + rate * (target - x)


def perturb(x, rate: float, amplitude: float, space: SearchSpace,
            rng: np.random.Generator) -> np.ndarray:
    """Element-wise neighbourhood proposal.

    Each continuous element moves, with probability ``rate``, by
    0.3 * N(0,1) * amplitude and is projected back into bounds. Each
    discrete element moves, with the same probability, to one of its two
    grid neighbours with equal odds (at an endpoint the single neighbour
    is taken half the time, otherwise no move).
    """
    x = np.asarray(x, dtype=float).copy()
    n = x.size
    uniforms = rng.random(n)
    normals = rng.standard_normal(n)
    selected = uniforms <= rate
    cont = selected & space.continuous_mask
    if cont.any():
        x[cont] += 0.3 * normals[cont] * amplitude
        x = space.project(x)
    if space.has_discrete:
        for i in range(n):
            if selected[i] and not space.continuous_mask[i]:
                # the normal draw's sign is a fair coin for the direction
                x[i] = space.grid_neighbor(x, i, 1 if normals[i] > 0 else -1)
    return x


# ---------------------------------------------------------------------------
# run record and main loop


@dataclass
class RunRecord:
    """Outcome of a single optimizer run."""

    problem_id: str
    seed: int
    best_per_iter: np.ndarray
    worst_per_iter: np.ndarray
    agent_trace: list  # (point, value) after each rotation / taken excursion of agent 0
    nfe: int
    iterations_used: int
    final_best: tuple
    wall_time: float

    def payload_equal(self, other: "RunRecord") -> bool:
        """Equality of every deterministic field (wall time excluded)."""
        return (
            self.problem_id == other.problem_id
            and self.seed == other.seed
            and np.array_equal(self.best_per_iter, other.best_per_iter)
            and np.array_equal(self.worst_per_iter, other.worst_per_iter)
            and self.nfe == other.nfe
            and self.iterations_used == other.iterations_used
            and np.array_equal(self.final_best[0], other.final_best[0])
            and self.final_best[1] == other.final_best[1]
            and len(self.agent_trace) == len(other.agent_trace)
            and all(
                np.array_equal(p, q) and v == w
                for (p, v), (q, w) in zip(self.agent_trace, other.agent_trace)
            )
        )


def run(problem: Problem, params: RealParams) -> RunRecord:
    """Execute the optimizer on a problem.

    Per iteration and agent: rotate about a schedule-chosen center and
    offer the result (a rotation about the space midpoint relocates the
    agent; one about an archive spot is an evaluated probe), then with
    probability equal to the learning efficiency take an excursion toward
    a random visible spot (always relocating), and finally propose a
    perturbation that the agent keeps only if it improves on the
    iteration's evaluated value. Every evaluation is offered to the
    visible-spot archive. Non-finite objective values are recorded as
    +inf and cannot displace finite entries.

    Returns
    -------
    RunRecord
        Traces, evaluation count and the best archived solution.
    """
    params.validate()
    space = problem.space
    started = time.perf_counter()

    pool = build_pool(space.ndim, params.pool_size, seeded_stream(params.seed, "rotation-pool"))
    rng = seeded_stream(params.seed, "engine-loop")

    amp_initial = params.initial_amplitude(space)
    amp_final = min(params.final_amplitude(space), amp_initial)
    total = params.iterations

    agents = np.empty((params.n_agents, space.ndim))
    for k in range(params.n_agents):
        agents[k] = space.snap(space.sample(rng))

    archive = VisibleSpotList(params.archive_size)
    nfe = 0

    def evaluate(point) -> float:
        nonlocal nfe
        nfe += 1
        value = float(problem.objective(point))
        return value if math.isfinite(value) else math.inf

    best_series = []
    worst_series = []
    trace = []
    iterations_used = 0

    for t in range(1, total + 1):
        iterations_used = t
        rho = scaled_learning_efficiency(t, total, params.gamma)
        amplitude = perturbation_amplitude(t, total, params.gamma, amp_initial, amp_final)
        for k in range(params.n_agents):
            x = agents[k]
            matrix = pool.pick(rng)
            center, center_is_spot = choose_rotation_center(
                archive, space, rho, rng, roulette=params.roulette)
            rotated = space.snap(rotate(x, matrix, center, space))
            value = evaluate(rotated)
            archive.offer(rotated, value)
            if k == 0:
                trace.append((rotated.copy(), value))
            if not center_is_spot:
                # midpoint-centered rotations relocate the agent (exploration);
                # spot-centered ones only probe the archive neighbourhood
                x = rotated
            if rng.random() < rho and len(archive) > 0:
                target = select_spot(archive, rng, roulette=params.roulette)
                x = space.snap(space.project(excursion(x, target, params.excursion_rate)))
                value = evaluate(x)
                archive.offer(x, value)
                if k == 0:
                    trace.append((x.copy(), value))
            proposal = perturb(x, params.perturb_rate, amplitude, space, rng)
            proposal_value = evaluate(proposal)
            archive.offer(proposal, proposal_value)
            if proposal_value < value:
                x = proposal
            agents[k] = x
        _, best_value = archive.best()
        worst_value = archive.worst_value()
        best_series.append(best_value)
        worst_series.append(worst_value)
        if params.term_tol is not None and params.term_tol >= 0:
            if abs(best_value - worst_value) <= params.term_tol:
                break

    best_point, best_value = archive.best()
    return RunRecord(
        problem_id=problem.problem_id,
        seed=params.seed,
        best_per_iter=np.array(best_series),
        worst_per_iter=np.array(worst_series),
        agent_trace=trace,
        nfe=nfe,
        iterations_used=iterations_used,
        final_best=(best_point.copy(), best_value),
        wall_time=time.perf_counter() - started,
    )
