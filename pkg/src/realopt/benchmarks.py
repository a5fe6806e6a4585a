"""Classic benchmark objectives, composition functions, and the
shifted-rotated Levy instance generator."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .problem import Problem
from .rng import seeded_stream
from .rotation import generate_orthogonal_matrix
from .space import SearchSpace

__all__ = [
    "get_problem",
    "catalog_ids",
    "CompositionSpec",
    "build_composition",
    "ShiftedRotatedLevy",
    "build_levy_sr",
    "levy_base",
    "evaluate_benchmark",
]


# ---------------------------------------------------------------------------
# base functions (all take a 1-D float array)


def sphere(x):
    return float(x @ x)


def abs_sum_prod(x):
    ax = np.abs(x)
    return float(ax.sum() + ax.prod())


def cumulative_squares(x):
    return float(np.sum(np.cumsum(x) ** 2))


def max_abs(x):
    return float(np.max(np.abs(x)))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def step_squares(x):
    return float(np.sum(np.floor(x + 0.5) ** 2))


def quartic_noise(x, noise_rng=None):
    """Weighted quartic plus uniform [0,1) noise from the injected source."""
    base = float(np.sum(np.arange(1, x.size + 1) * x ** 4))
    if noise_rng is None:
        return base
    return base + float(noise_rng.random())


def schwefel_sine(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x):
    return float(np.sum(x ** 2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def ackley(x):
    n = x.size
    return float(
        -20.0 * math.exp(-0.2 * math.sqrt(np.sum(x ** 2) / n))
        - math.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
        + 20.0 + math.e
    )


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x ** 2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def _penalty_u(x, a, k, m):
    out = np.zeros_like(x)
    above = x > a
    below = x < -a
    out[above] = k * (x[above] - a) ** m
    out[below] = k * (-x[below] - a) ** m
    return out


def penalized_1(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * math.sin(math.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(math.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(math.pi / n * core + np.sum(_penalty_u(x, 10.0, 100.0, 4)))


def penalized_2(x):
    core = (
        math.sin(3.0 * math.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * math.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + math.sin(2.0 * math.pi * x[-1]) ** 2)
    )
    return float(0.1 * core + np.sum(_penalty_u(x, 5.0, 100.0, 4)))


_FOX_POINTS = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
_FOX_A1 = np.tile(_FOX_POINTS, 5)
_FOX_A2 = np.repeat(_FOX_POINTS, 5)


def foxholes(x):
    denom = np.arange(1, 26) + (x[0] - _FOX_A1) ** 6 + (x[1] - _FOX_A2) ** 6
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / denom)))


_KOWALIK_A = np.array([0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627,
                       0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def kowalik(x):
    b = _KOWALIK_B
    model = x[0] * (b ** 2 + b * x[1]) / (b ** 2 + b * x[2] + x[3])
    return float(np.sum((_KOWALIK_A - model) ** 2))


def camel_six_hump(x):
    x1, x2 = x[0], x[1]
    return float(4 * x1 ** 2 - 2.1 * x1 ** 4 + x1 ** 6 / 3.0 + x1 * x2 - 4 * x2 ** 2 + 4 * x2 ** 4)


def branin(x):
    x1, x2 = x[0], x[1]
    return float(
        (x2 - 5.1 * x1 ** 2 / (4 * math.pi ** 2) + 5 * x1 / math.pi - 6) ** 2
        + 10 * (1 - 1 / (8 * math.pi)) * math.cos(x1) + 10
    )


def goldstein_price(x):
    x1, x2 = x[0], x[1]
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1 ** 2 - 14 * x2 + 6 * x1 * x2 + 3 * x2 ** 2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1 ** 2 + 48 * x2 - 36 * x1 * x2 + 27 * x2 ** 2)
    return float(a * b)


_H3_A = np.array([[3.0, 10, 30], [0.1, 10, 35], [3.0, 10, 30], [0.1, 10, 35]])
_H3_C = np.array([1.0, 1.2, 3.0, 3.2])
_H3_P = np.array([
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.0381, 0.5743, 0.8828],
])


def hartmann3(x):
    return float(-np.sum(_H3_C * np.exp(-np.sum(_H3_A * (x - _H3_P) ** 2, axis=1))))


_H6_A = np.array([
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
])
_H6_C = np.array([1.0, 1.2, 3.0, 3.2])
_H6_P = np.array([
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
])


def hartmann6(x):
    return float(-np.sum(_H6_C * np.exp(-np.sum(_H6_A * (x - _H6_P) ** 2, axis=1))))


_SHEKEL_A = np.array([
    [4.0, 4.0, 4.0, 4.0], [1.0, 1.0, 1.0, 1.0], [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0], [3.0, 7.0, 3.0, 7.0], [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0], [8.0, 1.0, 8.0, 1.0], [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
])
_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def shekel(x, m):
    a = _SHEKEL_A[:m]
    return float(-np.sum(1.0 / (np.sum((x - a) ** 2, axis=1) + _SHEKEL_C[:m])))


_WEIER_K = np.arange(21)
_WEIER_AK = 0.5 ** _WEIER_K
_WEIER_BK = 3.0 ** _WEIER_K
_WEIER_CONST = float(np.sum(_WEIER_AK * np.cos(2.0 * math.pi * _WEIER_BK * 0.5)))


def weierstrass(x):
    inner = np.sum(_WEIER_AK * np.cos(2.0 * math.pi * _WEIER_BK * (x[:, None] + 0.5)), axis=1)
    return float(np.sum(inner) - x.size * _WEIER_CONST)


def levy_base(y):
    """Levy function with w = 1 + (y - 1)/4; zero at the all-ones point."""
    w = 1.0 + (np.asarray(y, dtype=float) - 1.0) / 4.0
    return float(
        math.sin(math.pi * w[0]) ** 2
        + np.sum((w[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(math.pi * w[:-1] + 1.0) ** 2))
        + (w[-1] - 1.0) ** 2 * (1.0 + math.sin(2.0 * math.pi * w[-1]) ** 2)
    )


# ---------------------------------------------------------------------------
# composition functions


@dataclass(frozen=True)
class CompositionSpec:
    """Recipe for a ten-component composition objective.

    ``shifts`` (10 x dim) and ``rotations`` (10 x dim x dim) may be None,
    in which case they are drawn from the rng passed to
    :func:`build_composition`.
    """

    functions: tuple
    sigma: np.ndarray
    lam: np.ndarray
    dimension: int = 10
    lower: float = -5.0
    upper: float = 5.0
    shifts: np.ndarray | None = None
    rotations: np.ndarray | None = None
    bias: np.ndarray | None = None

    def __post_init__(self):
        count = len(self.functions)
        if count != 10:
            raise ValueError("composition uses exactly 10 components")
        if len(self.sigma) != count or len(self.lam) != count:
            raise ValueError("sigma and lam must list one value per component")
        if np.any(np.asarray(self.sigma) <= 0) or np.any(np.asarray(self.lam) <= 0):
            raise ValueError("sigma and lam values must be positive")


_COMPONENT_FUNCS = {
    "sphere": sphere,
    "griewank": griewank,
    "ackley": ackley,
    "rastrigin": rastrigin,
    "weierstrass": weierstrass,
}

_COMPOSITION_NORM_C = 2000.0


def build_composition(spec: CompositionSpec, rng: np.random.Generator,
                      problem_id: str = "CF") -> Problem:
    """Assemble a composition problem from a spec.

    Component i evaluates f_i(M_i (x - o_i) / lam_i), normalized to
    C * f_i / |f_i at the rescaled upper corner|, and the components are
    blended with Gaussian proximity weights (the largest weight kept,
    others damped by 1 - max_w^10) plus biases 0, 100, ..., 900. The
    global minimum is 0 at the first component's shift.
    """
    dim = spec.dimension
    funcs = [_COMPONENT_FUNCS[name] for name in spec.functions]
    sigma = np.asarray(spec.sigma, dtype=float)
    lam = np.asarray(spec.lam, dtype=float)
    bias = np.asarray(spec.bias, dtype=float) if spec.bias is not None \
        else np.arange(10, dtype=float) * 100.0
    if spec.shifts is not None:
        shifts = np.asarray(spec.shifts, dtype=float)
    else:
        shifts = spec.lower + rng.random((10, dim)) * (spec.upper - spec.lower)
    if spec.rotations is not None:
        rotations = np.asarray(spec.rotations, dtype=float)
    else:
        rotations = np.stack([generate_orthogonal_matrix(dim, rng).entries for _ in range(10)])

    corner = np.full(dim, spec.upper)
    norms = np.empty(10)
    for i in range(10):
        reference = abs(funcs[i](rotations[i] @ (corner / lam[i])))
        norms[i] = reference if reference > 1e-12 else 1.0

    def objective(x):
        x = np.asarray(x, dtype=float)
        diff = x - shifts
        dist2 = np.sum(diff ** 2, axis=1)
        exponent = -dist2 / (2.0 * dim * sigma ** 2)
        lead = int(np.argmax(exponent))
        top = exponent[lead]
        weights = np.exp(exponent - top)
        max_weight = math.exp(top) if top > -700 else 0.0
        is_max = np.zeros(10, dtype=bool)
        is_max[lead] = True
        weights = np.where(is_max, weights, weights * (1.0 - max_weight ** 10))
        total = weights.sum()
        weights = weights / total if total > 0 else np.full(10, 0.1)
        fit = np.empty(10)
        for i in range(10):
            fit[i] = _COMPOSITION_NORM_C * funcs[i](rotations[i] @ (diff[i] / lam[i])) / norms[i]
        return float(np.sum(weights * (fit + bias)))

    space = SearchSpace(np.full(dim, spec.lower), np.full(dim, spec.upper))
    return Problem(problem_id, space, objective, f_min=0.0, x_min=shifts[0].copy(),
                   info={"shifts": shifts, "sigma": sigma, "lam": lam})


_CF_SPECS = {
    "CF1": (("sphere",) * 10, np.ones(10), np.full(10, 5.0 / 100.0)),
    "CF2": (("griewank",) * 10, np.ones(10), np.full(10, 5.0 / 100.0)),
    "CF3": (("griewank",) * 10, np.ones(10), np.ones(10)),
    "CF4": (
        ("ackley",) * 2 + ("rastrigin",) * 2 + ("weierstrass",) * 2 + ("griewank",) * 2 + ("sphere",) * 2,
        np.ones(10),
        np.array([5 / 32, 5 / 32, 1, 1, 5 / 0.5, 5 / 0.5, 5 / 100, 5 / 100, 5 / 100, 5 / 100]),
    ),
    "CF5": (
        ("rastrigin",) * 2 + ("weierstrass",) * 2 + ("griewank",) * 2 + ("ackley",) * 2 + ("sphere",) * 2,
        np.ones(10),
        np.array([1 / 5, 1 / 5, 5 / 0.5, 5 / 0.5, 5 / 100, 5 / 100, 5 / 32, 5 / 32, 5 / 100, 5 / 100]),
    ),
    "CF6": (
        ("rastrigin",) * 2 + ("weierstrass",) * 2 + ("griewank",) * 2 + ("ackley",) * 2 + ("sphere",) * 2,
        np.arange(1, 11) * 0.1,
        np.array([0.1 * 1 / 5, 0.2 * 1 / 5, 0.3 * 5 / 0.5, 0.4 * 5 / 0.5, 0.5 * 5 / 100,
                  0.6 * 5 / 100, 0.7 * 5 / 32, 0.8 * 5 / 32, 0.9 * 5 / 100, 1.0 * 5 / 100]),
    ),
}


def composition_spec(cf_id: str) -> CompositionSpec:
    functions, sigma, lam = _CF_SPECS[cf_id]
    return CompositionSpec(functions=functions, sigma=sigma, lam=lam)


# ---------------------------------------------------------------------------
# shifted-rotated Levy


@dataclass(frozen=True)
class ShiftedRotatedLevy:
    """Levy composed with a rotation of the affine map 5.12 (x - 0.5) / 100."""

    dimension: int
    rotation: np.ndarray
    offset: float = 900.0

    def value(self, x) -> float:
        x = np.asarray(x, dtype=float)
        return levy_base(self.rotation @ (5.12 * (x - 0.5) / 100.0)) + self.offset

    def minimizer(self) -> np.ndarray:
        """Feasible point where the value equals the offset exactly."""
        return 0.5 + (100.0 / 5.12) * (self.rotation.T @ np.ones(self.dimension))

    def as_problem(self, problem_id: str | None = None) -> Problem:
        pid = problem_id or f"LEVY-SR-{self.dimension}"
        space = SearchSpace(np.full(self.dimension, -100.0), np.full(self.dimension, 100.0))
        return Problem(pid, space, self.value, f_min=self.offset, x_min=self.minimizer(),
                       info={"rotation": self.rotation})


def build_levy_sr(dimension: int, seed: int) -> ShiftedRotatedLevy:
    """Fresh shifted-rotated Levy instance from a seed."""
    if dimension < 1:
        raise ValueError("dimension must be >= 1")
    rotation = generate_orthogonal_matrix(dimension, seeded_stream(seed, "levy-rotation"))
    return ShiftedRotatedLevy(dimension, rotation.entries)


# ---------------------------------------------------------------------------
# catalog

# id: (builder stub resolved in get_problem)
_FIXED_DIM = {
    "F14": (foxholes, 2, (-65.536, 65.536), 0.9980038377944498,
            np.array([-31.97833357, -31.97833357])),
    "F15": (kowalik, 4, (-5.0, 5.0), 0.0003074859878056,
            np.array([0.19283345, 0.19083624, 0.12311729, 0.13576599])),
    "F16": (camel_six_hump, 2, (-5.0, 5.0), -1.0316284534898774,
            np.array([0.08984201, -0.7126564])),
    "F17": (branin, 2, (-5.0, 5.0), 0.39788735772973816,
            np.array([math.pi, 2.275])),
    "F18": (goldstein_price, 2, (-2.0, 2.0), 3.0, np.array([0.0, -1.0])),
    "F19": (hartmann3, 3, (0.0, 1.0), -3.862779787332663,
            np.array([0.11458888, 0.55564889, 0.85254698])),
    "F20": (hartmann6, 6, (0.0, 1.0), -3.3223680114155156,
            np.array([0.20168951, 0.15001069, 0.47687397, 0.27533243, 0.31165162, 0.65730053])),
    "F21": (lambda x: shekel(x, 5), 4, (0.0, 10.0), -10.153199679058229,
            np.array([4.00003715, 4.00013328, 4.00003715, 4.00013328])),
    "F22": (lambda x: shekel(x, 7), 4, (0.0, 10.0), -10.402940566818662,
            np.array([4.00057291, 4.00068937, 3.99948971, 3.99960616])),
    "F23": (lambda x: shekel(x, 10), 4, (0.0, 10.0), -10.536409816692046,
            np.array([4.00074653, 4.00059294, 3.9996634, 3.9995098])),
}

_SCALABLE = {
    "F1": (sphere, (-100.0, 100.0), "zeros"),
    "F2": (abs_sum_prod, (-10.0, 10.0), "zeros"),
    "F3": (cumulative_squares, (-100.0, 100.0), "zeros"),
    "F4": (max_abs, (-100.0, 100.0), "zeros"),
    "F5": (rosenbrock, (-30.0, 30.0), "ones"),
    "F6": (step_squares, (-100.0, 100.0), "zeros"),
    "F7": (quartic_noise, (-1.28, 1.28), "zeros"),
    "F8": (schwefel_sine, (-500.0, 500.0), "schwefel"),
    "F9": (rastrigin, (-5.12, 5.12), "zeros"),
    "F10": (ackley, (-32.0, 32.0), "zeros"),
    "F11": (griewank, (-512.0, 512.0), "zeros"),
    "F12": (penalized_1, (-50.0, 50.0), "neg_ones"),
    "F13": (penalized_2, (-50.0, 50.0), "ones"),
}

_CF_ALIAS = {"F24": "CF1", "F25": "CF2", "F26": "CF3", "F27": "CF4", "F28": "CF5", "F29": "CF6"}

_SCHWEFEL_ARG = 420.9687462275036


def catalog_ids() -> list[str]:
    """All benchmark ids, in suite order."""
    return [f"F{i}" for i in range(1, 30)] + ["LEVY-SR-10"]


def get_problem(problem_id: str, dimension: int | None = None, seed: int = 0) -> Problem:
    """Build a benchmark problem by id.

    F1..F13 accept an optional dimension (default 30). F14..F23 are
    fixed-dimension. F24..F29 (aliases CF1..CF6) and LEVY-SR-<D> draw
    their instance randomness (shifts, rotations) from the seed.
    """
    pid = problem_id.upper()
    if pid in _CF_ALIAS:
        pid = _CF_ALIAS[pid]
    if pid in _CF_SPECS:
        rng = seeded_stream(seed, f"composition-{pid}")
        return build_composition(composition_spec(pid), rng, problem_id=problem_id.upper())
    match = re.fullmatch(r"LEVY-SR(?:-(\d+))?", pid)
    if match:
        dim = int(match.group(1)) if match.group(1) else (dimension or 10)
        if dimension is not None and match.group(1) and dimension != dim:
            raise ValueError("dimension argument conflicts with the id suffix")
        return build_levy_sr(dim, seed).as_problem(problem_id=pid)
    if pid in _FIXED_DIM:
        func, dim, (lo, hi), f_min, x_min = _FIXED_DIM[pid]
        if dimension is not None and dimension != dim:
            raise ValueError(f"{pid} is fixed at dimension {dim}")
        space = SearchSpace(np.full(dim, lo), np.full(dim, hi))
        return Problem(pid, space, func, f_min=f_min, x_min=x_min)
    if pid in _SCALABLE:
        func, (lo, hi), argmin_kind = _SCALABLE[pid]
        dim = dimension or 30
        space = SearchSpace(np.full(dim, lo), np.full(dim, hi))
        if pid == "F7":
            noise = seeded_stream(seed, "quartic-noise")
            objective = lambda x, _rng=noise: quartic_noise(x, _rng)
        else:
            objective = func
        if argmin_kind == "zeros":
            x_min, f_min = np.zeros(dim), 0.0
        elif argmin_kind == "ones":
            x_min, f_min = np.ones(dim), 0.0
        elif argmin_kind == "neg_ones":
            x_min, f_min = -np.ones(dim), 0.0
        else:  # schwefel sine
            x_min = np.full(dim, _SCHWEFEL_ARG)
            f_min = -418.9828872724339 * dim
        return Problem(pid, space, objective, f_min=f_min, x_min=x_min)
    raise KeyError(f"unknown benchmark id {problem_id!r}")


def evaluate_benchmark(problem_id: str, x, dimension: int | None = None, seed: int = 0) -> float:
    """Evaluate a catalog objective at a point (dimension checked)."""
    problem = get_problem(problem_id, dimension=dimension, seed=seed)
    x = np.asarray(x, dtype=float)
    if x.size != problem.ndim:
        raise ValueError(f"{problem.problem_id} expects dimension {problem.ndim}, got {x.size}")
    return float(problem.objective(x))
