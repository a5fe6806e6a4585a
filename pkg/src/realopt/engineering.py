"""Seven constrained mechanical design problems, penalty-based constraint
handling, and the exhaustive oracle for the discrete clutch-brake design."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .problem import Problem
from .space import SearchSpace

__all__ = [
    "PenaltyPolicy",
    "Constraint",
    "ConstrainedProblem",
    "get_problem",
    "engineering_ids",
    "evaluate_raw",
    "penalized",
    "gripper_force_extrema",
    "brute_force_clutch",
    "NFE_BUDGETS",
]

# Table of per-problem evaluation budgets used for reported comparisons.
NFE_BUDGETS = {
    "B01": 1200, "B02": 30000, "B03": 16000, "B04": 48000,
    "B05": 24000, "B06": 72000, "B07": 32000,
}

NONFINITE_VIOLATION = 1e10


@dataclass(frozen=True)
class PenaltyPolicy:
    """Additive penalty: coefficient times total constraint violation."""

    coefficient: float = 1e9
    eq_tol: float = 1e-4

    def __post_init__(self):
        if self.coefficient <= 0:
            raise ValueError("penalty coefficient must be positive")
        if self.eq_tol < 0:
            raise ValueError("equality tolerance must be >= 0")


@dataclass(frozen=True)
class Constraint:
    name: str
    kind: str  # "ge" (value >= 0), "le" (value <= 0) or "eq" (value == 0)

    def violation(self, value: float, eq_tol: float) -> float:
        if not math.isfinite(value):
            return NONFINITE_VIOLATION
        if self.kind == "ge":
            return max(0.0, -value)
        if self.kind == "le":
            return max(0.0, value)
        return max(0.0, abs(value) - eq_tol)


class ConstrainedProblem:
    """Objective plus constraint evaluators in the source sign convention."""

    def __init__(self, problem_id: str, name: str, space: SearchSpace,
                 evaluator: Callable[[np.ndarray], tuple], constraints: tuple,
                 sense: str = "min", reference_x=None, reference_objective=None):
        self.problem_id = problem_id
        self.name = name
        self.space = space
        self._evaluator = evaluator
        self.constraints = constraints
        self.sense = sense
        self.reference_x = None if reference_x is None else np.asarray(reference_x, dtype=float)
        self.reference_objective = reference_objective

    def evaluate_raw(self, x) -> tuple[float, np.ndarray]:
        """Objective and every constraint value, untouched by penalties."""
        x = np.asarray(x, dtype=float)
        if x.size != self.space.ndim:
            raise ValueError(f"{self.problem_id} expects {self.space.ndim} variables")
        objective, values = self._evaluator(x)
        return float(objective), np.asarray(values, dtype=float)

    def violations(self, constraint_values, policy: PenaltyPolicy) -> np.ndarray:
        return np.array([
            c.violation(float(v), policy.eq_tol)
            for c, v in zip(self.constraints, constraint_values)
        ])

    def is_feasible(self, x, policy: PenaltyPolicy | None = None) -> bool:
        policy = policy or PenaltyPolicy()
        _, values = self.evaluate_raw(x)
        return bool(np.all(self.violations(values, policy) == 0.0))

    def penalized(self, x, policy: PenaltyPolicy | None = None) -> float:
        """Value the optimizer minimizes: the (sense-adjusted) objective
        plus coefficient times total violation. Maximization problems
        enter negated. Always finite or +inf."""
        policy = policy or PenaltyPolicy()
        objective, values = self.evaluate_raw(x)
        if not math.isfinite(objective):
            return math.inf
        total = float(np.sum(self.violations(values, policy)))
        signed = -objective if self.sense == "max" else objective
        return signed + policy.coefficient * total

    def display_value(self, engine_value: float) -> float:
        """Map an engine (minimized) value back to the source convention."""
        return -engine_value if self.sense == "max" else engine_value

    def as_problem(self, policy: PenaltyPolicy | None = None) -> Problem:
        policy = policy or PenaltyPolicy()
        reference = None
        if self.reference_objective is not None:
            reference = (-self.reference_objective if self.sense == "max"
                         else self.reference_objective)
        return Problem(
            self.problem_id, self.space,
            lambda x: self.penalized(x, policy),
            f_min=reference,
            x_min=self.reference_x,
            info={"constrained": self, "policy": policy},
        )

    def __repr__(self):
        return f"ConstrainedProblem({self.problem_id!r}, {self.name!r})"


# ---------------------------------------------------------------------------
# B01 multiple disc clutch brake (all-discrete)

_B01_GRIDS = (
    np.arange(60.0, 81.0),            # inner radius, mm
    np.arange(90.0, 111.0),           # outer radius, mm
    np.array([1.0, 1.5, 2.0, 2.5, 3.0]),  # disc thickness, mm
    np.arange(600.0, 1001.0, 10.0),   # actuating force, N
    np.arange(2.0, 10.0),             # friction surfaces
)

_B01 = dict(delta_r=20.0, l_max=30.0, gap=0.5, p_max=1.0, v_max=10.0, mu=0.5,
            s=1.5, m_static=40.0, m_f=3.0, speed=250.0, inertia=55.0, t_max=15.0,
            density=7.8e-6)


def _b01_quantities(ri, ro, thickness, force, surfaces):
    c = _B01
    area = math.pi * (ro ** 2 - ri ** 2)
    ratio = (ro ** 3 - ri ** 3) / (ro ** 2 - ri ** 2)
    # friction moment in N*m; radii in mm hence the /1000
    m_h = (2.0 / 3.0) * c["mu"] * force * surfaces * ratio / 1000.0
    pressure = force / area
    velocity = math.pi * (2.0 / 3.0) * ratio * c["speed"] / 30000.0  # m/s
    stop_time = c["inertia"] * math.pi * c["speed"] / (30.0 * m_h)
    return area, m_h, pressure, velocity, stop_time


def _b01_eval(x):
    ri, ro, thickness, force, surfaces = x
    c = _B01
    area, m_h, pressure, velocity, stop_time = _b01_quantities(ri, ro, thickness, force, surfaces)
    mass = area * thickness * (surfaces + 1) * c["density"]
    g = [
        ro - ri - c["delta_r"],
        c["l_max"] - (surfaces + 1) * (thickness + c["gap"]),
        c["p_max"] - pressure,
        c["p_max"] * c["v_max"] - pressure * velocity,
        c["v_max"] - velocity,
        c["t_max"] - stop_time,
        m_h - c["s"] * c["m_static"],
        stop_time,
    ]
    return mass, g


def _clutch_problem() -> ConstrainedProblem:
    lower = [g[0] for g in _B01_GRIDS]
    upper = [g[-1] for g in _B01_GRIDS]
    space = SearchSpace(lower, upper, grids=_B01_GRIDS)
    constraints = tuple(Constraint(f"g{i}", "ge") for i in range(1, 9))
    return ConstrainedProblem(
        "B01", "multiple disc clutch brake", space, _b01_eval, constraints,
        reference_x=[70, 90, 1, 820, 3], reference_objective=0.313657)


def brute_force_clutch() -> tuple[np.ndarray, float]:
    """Exhaustively enumerate the clutch grid; feasible minimizer of the
    raw objective. 21*21*5*41*8 = 723,240 combinations."""
    c = _B01
    ri, ro, thickness, force, surfaces = np.meshgrid(*_B01_GRIDS, indexing="ij")
    area = np.pi * (ro ** 2 - ri ** 2)
    ratio = (ro ** 3 - ri ** 3) / (ro ** 2 - ri ** 2)
    m_h = (2.0 / 3.0) * c["mu"] * force * surfaces * ratio / 1000.0
    pressure = force / area
    velocity = np.pi * (2.0 / 3.0) * ratio * c["speed"] / 30000.0
    stop_time = c["inertia"] * np.pi * c["speed"] / (30.0 * m_h)
    mass = area * thickness * (surfaces + 1) * c["density"]
    feasible = (
        (ro - ri - c["delta_r"] >= 0)
        & (c["l_max"] - (surfaces + 1) * (thickness + c["gap"]) >= 0)
        & (c["p_max"] - pressure >= 0)
        & (c["p_max"] * c["v_max"] - pressure * velocity >= 0)
        & (c["v_max"] - velocity >= 0)
        & (c["t_max"] - stop_time >= 0)
        & (m_h - c["s"] * c["m_static"] >= 0)
        & (stop_time >= 0)
    )
    masked = np.where(feasible, mass, np.inf)
    flat = int(np.argmin(masked))
    idx = np.unravel_index(flat, mass.shape)
    best = np.array([ri[idx], ro[idx], thickness[idx], force[idx], surfaces[idx]])
    return best, float(mass[idx])


# ---------------------------------------------------------------------------
# B02 robot gripper

_B02 = dict(y_min=50.0, y_max=100.0, y_g=150.0, z_max=100.0, p=100.0)


def _gripper_force(x, z, denominator="2c"):
    a, b, c, e, _f, link, delta = x
    dz2 = (link - z) ** 2 + e ** 2
    d = math.sqrt(dz2)
    if d == 0:
        return math.nan
    phi = math.atan2(e, link - z)
    cos_alpha = (a ** 2 + dz2 - b ** 2) / (2 * a * d)
    cos_beta = (b ** 2 + dz2 - a ** 2) / (2 * b * d)
    if abs(cos_alpha) > 1 or abs(cos_beta) > 1:
        return math.nan
    alpha = math.acos(cos_alpha) + phi
    beta = math.acos(cos_beta) - phi
    if denominator == "2c":
        denom = 2.0 * c * math.cos(alpha)
    else:  # printed form; z-dependent denominator selectable for comparison
        denom = z * c * math.cos(alpha)
    if denom == 0:
        return math.nan
    return _B02["p"] * b * math.sin(alpha + beta) / denom


def _gripper_opening(x, z):
    a, b, c, e, f, link, delta = x
    dz2 = (link - z) ** 2 + e ** 2
    d = math.sqrt(dz2)
    if d == 0:
        return math.nan
    phi = math.atan2(e, link - z)
    cos_beta = (b ** 2 + dz2 - a ** 2) / (2 * b * d)
    if abs(cos_beta) > 1:
        return math.nan
    beta = math.acos(cos_beta) - phi
    return 2.0 * (e + f + c * math.sin(beta + delta))


def _golden_section(func, lo, hi, tol=1e-6):
    """Minimize a scalar function on [lo, hi]; non-finite values repel."""
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - inv * (hi - lo)
    d = lo + inv * (hi - lo)
    def guarded(z):
        v = func(z)
        return v if math.isfinite(v) else math.inf
    fc, fd = guarded(c), guarded(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - inv * (hi - lo)
            fc = guarded(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv * (hi - lo)
            fd = guarded(d)
    mid = 0.5 * (lo + hi)
    return mid, func(mid)


def gripper_force_extrema(x, denominator="2c", grid_points=101):
    """(max, min) of the gripping force over the stroke [0, z_max].

    Uniform grid plus golden-section refinement around the grid extrema;
    z values with undefined geometry are excluded. Returns a non-finite
    pair when the geometry fails everywhere.
    """
    z_max = _B02["z_max"]
    zs = np.linspace(0.0, z_max, grid_points)
    values = np.array([_gripper_force(x, z, denominator) for z in zs])
    finite = np.isfinite(values)
    if not finite.any():
        return math.nan, math.nan
    finite_idx = np.flatnonzero(finite)
    i_hi = finite_idx[np.argmax(values[finite_idx])]
    i_lo = finite_idx[np.argmin(values[finite_idx])]
    fmax = float(values[i_hi])
    fmin = float(values[i_lo])
    lo_b, hi_b = zs[max(i_hi - 1, 0)], zs[min(i_hi + 1, grid_points - 1)]
    _, refined = _golden_section(lambda z: -_gripper_force(x, z, denominator), lo_b, hi_b)
    if math.isfinite(refined):
        fmax = max(fmax, -refined)
    lo_b, hi_b = zs[max(i_lo - 1, 0)], zs[min(i_lo + 1, grid_points - 1)]
    _, refined = _golden_section(lambda z: _gripper_force(x, z, denominator), lo_b, hi_b)
    if math.isfinite(refined):
        fmin = min(fmin, refined)
    return fmax, fmin


def _b02_eval_factory(denominator="2c"):
    def _eval(x):
        a, b, c, e, f, link, delta = x
        g2c = _B02
        fmax, fmin = gripper_force_extrema(x, denominator)
        objective = fmax - fmin if math.isfinite(fmax) and math.isfinite(fmin) else math.nan
        y_stroke = _gripper_opening(x, g2c["z_max"])
        y_rest = _gripper_opening(x, 0.0)
        d_stroke = math.sqrt((link - g2c["z_max"]) ** 2 + e ** 2)
        d_rest = math.sqrt(link ** 2 + e ** 2)
        g = [
            g2c["y_min"] - y_stroke,
            y_stroke,
            y_rest - g2c["y_max"],
            g2c["y_g"] - y_rest,
            (a + b) ** 2 - link ** 2 - e ** 2,
            (link - g2c["z_max"]) ** 2 + (a - e) ** 2 - b ** 2,
            link - g2c["z_max"],
            d_stroke + b - a,
            d_rest + b - a,
            b + a - d_rest,
        ]
        return objective, g
    return _eval


def _gripper_problem(denominator="2c") -> ConstrainedProblem:
    space = SearchSpace(
        [10.0, 10.0, 100.0, 0.0, 10.0, 100.0, 1.0],
        [150.0, 150.0, 200.0, 50.0, 150.0, 300.0, 3.14],
    )
    constraints = tuple(Constraint(f"g{i}", "ge") for i in range(1, 11))
    return ConstrainedProblem(
        "B02", "robot gripper", space, _b02_eval_factory(denominator), constraints,
        reference_x=[150.0, 131.323, 186.550, 17.481, 103.224, 145.000, 2.383],
        reference_objective=4.97437160)


# ---------------------------------------------------------------------------
# B03 rolling element bearing (maximization, mixed discrete)

_B03 = dict(D=160.0, d=90.0, b_w=30.0)


def _b03_eval(x):
    dm, db, balls, fi, fo, kd_min, kd_max, eps, e, zeta = x
    D, d = _B03["D"], _B03["d"]
    gamma = db / dm  # contact angle is zero
    fc = (37.91
          * (1.0 + (1.04 * ((1 - gamma) / (1 + gamma)) ** 1.72
                    * (fi * (2 * fo - 1) / (fo * (2 * fi - 1))) ** 0.41) ** (10.0 / 3.0)) ** (-0.3)
          * (gamma ** 0.3 * (1 - gamma) ** 1.39 / (1 + gamma) ** (1.0 / 3.0))
          * (2 * fi / (2 * fi - 1)) ** 0.41)
    t = D - d - 2 * db
    half_span = (D - d) / 2.0 - 3.0 * (t / 4.0)
    ball_center = D / 2.0 - t / 4.0 - db
    hub = d / 2.0 + t / 4.0
    cos_arg = (half_span ** 2 + ball_center ** 2 - hub ** 2) / (2.0 * half_span * ball_center)
    phi0 = 2.0 * math.pi - 2.0 * math.acos(cos_arg) if abs(cos_arg) <= 1 else math.nan
    if db <= 25.4:
        capacity = fc * balls ** (2.0 / 3.0) * db ** 1.8
    else:
        capacity = 3.64 * fc * balls ** (2.0 / 3.0) * db ** 1.4
    asin_arg = db / dm
    g1 = phi0 / (2.0 * math.asin(asin_arg)) - balls + 1 if abs(asin_arg) <= 1 else math.nan
    g = [
        g1,
        2 * db - kd_min * (D - d),
        kd_max * (D - d) - 2 * db,
        zeta * _B03["b_w"] - db,           # the one <= 0 constraint
        dm - 0.5 * (D + d),
        (0.5 + e) * (D + d) - dm,
        0.5 * (D - dm - db) - eps * db,
        fi - 0.515,
        fo - 0.515,
    ]
    return capacity, g


def _bearing_problem() -> ConstrainedProblem:
    D, d = _B03["D"], _B03["d"]
    grids = [None, None, np.arange(4.0, 51.0)] + [None] * 7
    space = SearchSpace(
        [0.5 * (D + d), 0.15 * (D - d), 4.0, 0.515, 0.515, 0.4, 0.6, 0.3, 0.02, 0.6],
        [0.6 * (D + d), 0.45 * (D - d), 50.0, 0.6, 0.6, 0.5, 0.7, 0.4, 0.1, 0.85],
        grids=grids,
    )
    kinds = ["ge", "ge", "ge", "le", "ge", "ge", "ge", "ge", "ge"]
    constraints = tuple(Constraint(f"g{i+1}", k) for i, k in enumerate(kinds))
    return ConstrainedProblem(
        "B03", "rolling element bearing", space, _b03_eval, constraints, sense="max",
        reference_x=[125.719, 21.426, 11.023, 0.515, 0.515, 0.486, 0.680, 0.300, 0.099, 0.708],
        reference_objective=81859.7407)


# ---------------------------------------------------------------------------
# B04 hydrodynamic thrust bearing

_B04 = dict(gamma=0.0307, c=0.5, n=-3.55, c1=10.04, load=101000.0, p_max=1000.0,
            dt_max=50.0, h_min=0.001, g=386.4, speed=750.0)


def _b04_eval(x):
    R, R0, mu, Q = x
    c = _B04
    with np.errstate(all="ignore"):
        inner = 8.122e6 * mu + 0.8
        if inner <= 0:
            return math.nan, [math.nan] * 7
        log_inner = math.log10(inner)
        if log_inner <= 0:
            return math.nan, [math.nan] * 7
        p_exp = (math.log10(log_inner) - c["c1"]) / c["n"]
        delta_t = 2.0 * (10.0 ** p_exp - 560.0)
        e_f = 9336.0 * Q * c["gamma"] * c["c"] * delta_t
        if e_f == 0 or R <= R0 or R0 <= 0:
            return math.nan, [math.nan] * 7
        h = (2.0 * math.pi * c["speed"] / 60.0) ** 2 * (2.0 * math.pi * mu / e_f) \
            * (R ** 4 - R0 ** 4) / 4.0
        if h <= 0:
            return math.nan, [math.nan] * 7
        log_ratio = math.log(R / R0)
        p0 = (6.0 * mu * Q / (math.pi * h ** 3)) * log_ratio
        load = (math.pi * p0 / 2.0) * (R ** 2 - R0 ** 2) / log_ratio
        # power loss converted to the published unit scale (per foot)
        objective = (Q * p0 / 0.7 + e_f) / 12.0
        g = [
            load - c["load"],
            c["p_max"] - p0,
            c["dt_max"] - delta_t,
            h - c["h_min"],
            R - R0,
            0.001 - (c["gamma"] / (c["g"] * p0)) * (Q / (2.0 * math.pi * R * h)) ** 2,
            5000.0 - load / (math.pi * (R ** 2 - R0 ** 2)),
        ]
    return objective, g


def _thrust_bearing_problem() -> ConstrainedProblem:
    space = SearchSpace([1.0, 1.0, 1e-6, 1.0], [16.0, 16.0, 16e-6, 16.0])
    constraints = tuple(Constraint(f"g{i}", "ge") for i in range(1, 8))
    return ConstrainedProblem(
        "B04", "hydrodynamic thrust bearing", space, _b04_eval, constraints,
        reference_x=[5.955, 5.389, 5.359e-6, 2.270], reference_objective=1625.443)


# ---------------------------------------------------------------------------
# B05 Belleville spring

_B05 = dict(p_max=5400.0, d_max=0.2, stress=200000.0, modulus=30e6, poisson=0.3,
            height=2.0, de_max=12.01)

_FA_VALUES = np.array([1.0, 0.85, 0.77, 0.71, 0.66, 0.63, 0.60, 0.58,
                       0.56, 0.55, 0.53, 0.52, 0.51, 0.51, 0.5])


def _deflection_factor(a: float) -> float:
    """Step-table lookup of f(a): nearest listed a, midpoints rounding up,
    clamped to 1 below 1.4 and 0.5 above 2.8."""
    index = int(math.floor((a - 1.4) / 0.1 + 0.5))
    return float(_FA_VALUES[min(max(index, 0), 14)])


def _b05_eval(x):
    t, h, di, de = x
    c = _B05
    if de <= 0 or di <= 0 or de == di:
        return math.nan, [math.nan] * 7
    k = de / di
    if k <= 0 or k == 1.0:
        return math.nan, [math.nan] * 7
    ln_k = math.log(k)
    alpha = (6.0 / (math.pi * ln_k)) * ((k - 1.0) / k) ** 2
    beta = (6.0 / (math.pi * ln_k)) * ((k - 1.0) / ln_k - 1.0)
    gamma = (6.0 / (math.pi * ln_k)) * ((k - 1.0) / 2.0)
    stiffness = 4.0 * c["modulus"] * c["d_max"] / ((1.0 - c["poisson"] ** 2) * alpha * de ** 2)
    objective = 0.07075 * math.pi * (de ** 2 - di ** 2) * t
    g = [
        c["stress"] - stiffness * (beta * (h - c["d_max"] / 2.0) + gamma * t),
        stiffness * ((h - c["d_max"] / 2.0) * (h - c["d_max"]) * t + t ** 3) - c["p_max"],
        _deflection_factor(h / t) * h - c["d_max"],
        c["height"] - h - t,
        c["de_max"] - de,
        de - di,
        0.3 - h / (de - di),
    ]
    return objective, g


def _belleville_problem() -> ConstrainedProblem:
    space = SearchSpace([0.01, 0.05, 5.0, 5.0], [6.0, 0.5, 15.0, 15.0])
    constraints = tuple(Constraint(f"g{i}", "ge") for i in range(1, 8))
    return ConstrainedProblem(
        "B05", "Belleville spring", space, _b05_eval, constraints,
        reference_x=[0.204, 0.200, 10.014, 11.997], reference_objective=1.9806)


# ---------------------------------------------------------------------------
# B06 step-cone pulley

_B06 = dict(density=7.2e-6, axis=3000.0, mu=0.35, stress=1.75, belt_t=8.0,
            speed=350.0, speeds=np.array([750.0, 450.0, 250.0, 150.0]),
            power_floor=0.75 * 745.6998)


def _b06_eval(x):
    d = np.asarray(x[:4], dtype=float)
    w = float(x[4])
    c = _B06
    ratio = c["speeds"] / c["speed"]
    objective = c["density"] * w * float(np.sum(d ** 2 * (1.0 + ratio ** 2)))
    with np.errstate(all="ignore"):
        asin_arg = (ratio - 1.0) * d / (2.0 * c["axis"])
        if np.any(np.abs(asin_arg) > 1):
            return math.nan, [math.nan] * 11
        theta = np.pi - 2.0 * np.arcsin(asin_arg)
        lengths = (np.pi * d / 2.0 * (1.0 + ratio)
                   + (ratio - 1.0) ** 2 * d ** 2 / (4.0 * c["axis"]) + 2.0 * c["axis"])
        tension = np.exp(c["mu"] * theta)
        power = (c["stress"] * c["belt_t"] * w * (1.0 - np.exp(-c["mu"] * theta))
                 * np.pi * d * c["speeds"] / 60000.0)
    h = [lengths[0] - lengths[1], lengths[0] - lengths[2], lengths[0] - lengths[3]]
    g = list(tension - 2.0) + list(power - c["power_floor"])
    return objective, h + g


def _pulley_problem() -> ConstrainedProblem:
    space = SearchSpace([1.0] * 5, [100.0] * 5)
    constraints = tuple(
        [Constraint(f"h{i}", "eq") for i in range(1, 4)]
        + [Constraint(f"g{i}", "ge") for i in range(1, 9)]
    )
    return ConstrainedProblem(
        "B06", "step-cone pulley", space, _b06_eval, constraints,
        reference_x=[34.585, 47.586, 63.444, 76.075, 99.990], reference_objective=18.4484)


# ---------------------------------------------------------------------------
# B07 speed reducer


def _b07_eval(x):
    x1, x2, x3, x4, x5, x6, x7 = x
    objective = (0.7854 * x1 * x2 ** 2 * (3.3333 * x3 ** 2 + 14.9334 * x3 - 43.0934)
                 - 1.508 * x1 * (x6 ** 2 + x7 ** 2)
                 + 7.4777 * (x6 ** 3 + x7 ** 3)
                 + 0.7854 * (x4 * x6 ** 2 + x5 * x7 ** 2))
    g = [
        27.0 / (x1 * x2 ** 2 * x3) - 1.0,
        397.5 / (x1 * x2 ** 2 * x3 ** 2) - 1.0,
        1.93 * x4 ** 3 / (x2 * x3 * x6 ** 4) - 1.0,
        1.93 * x5 ** 3 / (x2 * x3 * x7 ** 4) - 1.0,
        math.sqrt((745.0 * x4 / (x2 * x3)) ** 2 + 16.9e6) / (110.0 * x6 ** 3) - 1.0,
        math.sqrt((745.0 * x5 / (x2 * x3)) ** 2 + 157.5e6) / (85.0 * x7 ** 3) - 1.0,
        x2 * x3 / 40.0 - 1.0,
        5.0 * x2 / x1 - 1.0,
        x1 / (12.0 * x2) - 1.0,
        (1.5 * x6 + 1.9) / x4 - 1.0,
        (1.1 * x7 + 1.9) / x5 - 1.0,
    ]
    return objective, g


def _speed_reducer_problem() -> ConstrainedProblem:
    space = SearchSpace([2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0],
                        [3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5])
    constraints = tuple(Constraint(f"g{i}", "le") for i in range(1, 12))
    return ConstrainedProblem(
        "B07", "speed reducer", space, _b07_eval, constraints,
        reference_x=[3.5, 0.7, 17.0, 7.3, 7.715, 3.350, 5.287],
        reference_objective=2994.4711)


# ---------------------------------------------------------------------------
# catalog

_BUILDERS = {
    "B01": _clutch_problem,
    "B02": _gripper_problem,
    "B03": _bearing_problem,
    "B04": _thrust_bearing_problem,
    "B05": _belleville_problem,
    "B06": _pulley_problem,
    "B07": _speed_reducer_problem,
}


def engineering_ids() -> list[str]:
    return sorted(_BUILDERS)


def get_problem(problem_id: str, **kwargs) -> ConstrainedProblem:
    """Constrained problem by id ("B01".."B07").

    B02 accepts ``denominator`` ("2c" default, "zc" for the alternative
    printed force denominator).
    """
    pid = problem_id.upper()
    if pid not in _BUILDERS:
        raise KeyError(f"unknown engineering problem id {problem_id!r}")
    return _BUILDERS[pid](**kwargs)


def evaluate_raw(problem_id: str, x, **kwargs):
    """(objective, constraint values) in the source sign convention."""
    return get_problem(problem_id, **kwargs).evaluate_raw(x)


def penalized(problem_id: str, x, policy: PenaltyPolicy | None = None, **kwargs) -> float:
    """Penalty-merged scalar the optimizer minimizes."""
    return get_problem(problem_id, **kwargs).penalized(x, policy)
