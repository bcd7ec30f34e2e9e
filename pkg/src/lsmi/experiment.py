"""Monte-Carlo sweep over snapshot dimension and input SINR.

For every (N, input SINR) cell the harness draws training samples,
forms the sample covariance, computes the weights of each configured
method, and scores every method against the TRUE covariance. Methods:

* ``optimal``     - R^{-1} s with the known covariance (the ceiling),
* ``fixed``       - LSMI with alpha = 10 sigma_n^2,
* ``adaptive``    - LSMI with the iterative loading-factor optimizer,
* ``grid_oracle`` - exhaustive search over a loading grid, scored
  against the true covariance; an omniscient upper reference for any
  loading rule. The grid is augmented with the trial's fixed and
  adaptive alphas so the oracle dominates both by construction.

The sweep sets the total interference power from the per-cell target as
signal_power * 10^(-target_db / 10); component powers keep their
configured ratios.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from . import core, scenario
from .scenario import ScenarioConfig, substream

__all__ = [
    "METHODS",
    "GridSpec",
    "ExperimentConfig",
    "ResultRow",
    "CellFailure",
    "ExperimentResult",
    "TrialOutcome",
    "run_trial",
    "grid_oracle",
    "run_experiment",
    "result_to_csv",
]

METHODS = ("optimal", "fixed", "adaptive", "grid_oracle")

CSV_HEADER = (
    "n,m,input_sinr_db,method,mean_output_sinr_db,std_output_sinr_db,"
    "mean_output_sinr_linear,mean_alpha,clamp_rate,trials"
)


@dataclass(frozen=True)
class GridSpec:
    """Log-spaced loading grid, in dB relative to the noise power."""

    alpha_min_db: float = -20.0
    alpha_max_db: float = 40.0
    points: int = 61

    def alphas(self, noise_power: float) -> np.ndarray:
        if self.points < 1:
            raise ValueError("grid needs at least one point")
        if self.points == 1:
            return np.array([noise_power * 10.0 ** (self.alpha_min_db / 10.0)])
        exps = np.linspace(self.alpha_min_db, self.alpha_max_db, self.points)
        return noise_power * 10.0 ** (exps / 10.0)


@dataclass(frozen=True)
class ExperimentConfig:
    scenario: ScenarioConfig
    n_values: tuple[int, ...]
    input_sinr_db: tuple[float, ...]
    trials: int
    seed: int
    methods: tuple[str, ...] = METHODS
    m_ratio: float = 1.0
    adaptive_T: int = 3
    grid: GridSpec = field(default_factory=GridSpec)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.n_values:
            raise ValueError("n_values must be nonempty")
        if self.adaptive_T < 1:
            raise ValueError("adaptive_T must be >= 1")
        if self.m_ratio <= 0:
            raise ValueError("m_ratio must be positive")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        object.__setattr__(self, "n_values", tuple(int(v) for v in self.n_values))
        object.__setattr__(self, "input_sinr_db", tuple(float(v) for v in self.input_sinr_db))
        object.__setattr__(self, "methods", tuple(self.methods))

    def m_for(self, n: int) -> int:
        return max(1, round(self.m_ratio * n))


class TrialOutcome(NamedTuple):
    output_sinr: float  # linear
    alpha: float  # nan where no loading factor applies
    clamped: bool


@dataclass(frozen=True)
class ResultRow:
    n: int
    m: int
    input_sinr_db: float
    method: str
    mean_output_sinr_db: float
    std_output_sinr_db: float
    mean_output_sinr_linear: float
    mean_alpha: float
    clamp_rate: float
    trials: int


@dataclass(frozen=True)
class CellFailure:
    n: int
    input_sinr_db: float
    trial_index: int
    message: str


@dataclass(frozen=True)
class ExperimentResult:
    rows: tuple[ResultRow, ...]
    failures: tuple[CellFailure, ...]
    seed: int

    @property
    def ok(self) -> bool:
        return not self.failures


def grid_oracle(r_hat, s, r_true, signal_power: float, grid_alphas) -> tuple[float, float]:
    """Best loading factor on the grid, scored against the true covariance.

    Returns (alpha, output SINR); ties broken toward the smaller alpha.
    """
    grid_alphas = np.sort(np.asarray(grid_alphas, dtype=float))
    if grid_alphas.size == 0:
        raise ValueError("empty loading grid")
    best_alpha = best_sinr = -np.inf
    for alpha in grid_alphas:
        w = core.loaded_weights(r_hat, alpha, s)
        sinr = core.rayleigh_quotient(w, s, r_true, signal_power)
        if sinr > best_sinr:
            best_alpha, best_sinr = alpha, sinr
    return float(best_alpha), float(best_sinr)


def resolve_scenario(template: ScenarioConfig, n: int, input_sinr_db: float) -> ScenarioConfig:
    """Fix the snapshot dimension and set the interference power for a cell."""
    total = template.signal_power * 10.0 ** (-input_sinr_db / 10.0)
    return replace(template.with_interference_power(total), n=n)


def run_trial(
    cfg: ScenarioConfig,
    n: int,
    m: int,
    methods,
    seed: int,
    trial_index: int,
    adaptive_iterations: int = 3,
    grid: GridSpec | None = None,
) -> dict[str, TrialOutcome]:
    """One Monte-Carlo trial: draw training data, run every method,
    score each against the true covariance. Deterministic in
    (seed, trial_index)."""
    cfg = replace(cfg, n=n)
    s = scenario.steering_vector(cfg.signal_doppler, cfg.prf, cfg.n)
    r_true = scenario.true_covariance(cfg)

    sample = scenario.draw_snapshots(r_true, m, substream(seed, trial_index, "snapshots"))
    if cfg.contaminated:
        sample = scenario.contaminate(
            sample, s, cfg.training_signal_power, substream(seed, trial_index, "contamination")
        )
    r_hat = core.sample_covariance(sample)

    fixed_alpha = core.FIXED_LOADING_MULTIPLIER * cfg.noise_power
    out: dict[str, TrialOutcome] = {}
    trace = None
    if "optimal" in methods:
        w = core.optimal_weights(r_true, s)
        sinr = core.rayleigh_quotient(w, s, r_true, cfg.signal_power)
        out["optimal"] = TrialOutcome(sinr, np.nan, False)
    if "fixed" in methods:
        w = core.fixed_loading_weights(r_hat, s, cfg.noise_power)
        sinr = core.rayleigh_quotient(w, s, r_true, cfg.signal_power)
        out["fixed"] = TrialOutcome(sinr, fixed_alpha, False)
    if "adaptive" in methods or "grid_oracle" in methods:
        trace = core.iterative_loading(r_hat, s, cfg.noise_power, adaptive_iterations)
    if "adaptive" in methods:
        sinr = core.rayleigh_quotient(trace.final_weights, s, r_true, cfg.signal_power)
        out["adaptive"] = TrialOutcome(sinr, trace.final_alpha, trace.clamp_fired)
    if "grid_oracle" in methods:
        grid = grid or GridSpec()
        alphas = np.concatenate(
            [grid.alphas(cfg.noise_power), [fixed_alpha, trace.final_alpha]]
        )
        alpha, sinr = grid_oracle(r_hat, s, r_true, cfg.signal_power, alphas)
        out["grid_oracle"] = TrialOutcome(sinr, alpha, False)
    return out


def _aggregate(
    n: int, m: int, sinr_db: float, method: str, outcomes: list[TrialOutcome]
) -> ResultRow:
    linear = np.array([o.output_sinr for o in outcomes])
    db = 10.0 * np.log10(linear)
    alphas = np.array([o.alpha for o in outcomes])
    clamps = np.array([o.clamped for o in outcomes], dtype=float)
    return ResultRow(
        n=n,
        m=m,
        input_sinr_db=sinr_db,
        method=method,
        mean_output_sinr_db=float(db.mean()),
        std_output_sinr_db=float(db.std()),
        mean_output_sinr_linear=float(linear.mean()),
        mean_alpha=float(alphas.mean()),
        clamp_rate=float(clamps.mean()),
        trials=len(outcomes),
    )


def _failed_row(n: int, m: int, sinr_db: float, method: str, completed: int) -> ResultRow:
    return ResultRow(
        n=n,
        m=m,
        input_sinr_db=sinr_db,
        method=method,
        mean_output_sinr_db=np.nan,
        std_output_sinr_db=np.nan,
        mean_output_sinr_linear=np.nan,
        mean_alpha=np.nan,
        clamp_rate=np.nan,
        trials=completed,
    )


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Full sweep over (n, input SINR); per-trial SINR is aggregated in dB.

    A trial failure aborts its cell; the cell's rows carry NaN means and
    the failure is reported alongside, never silently dropped.
    """
    rows: list[ResultRow] = []
    failures: list[CellFailure] = []
    methods = [m for m in METHODS if m in cfg.methods]  # canonical order

    for n in sorted(cfg.n_values):
        for sinr_db in sorted(cfg.input_sinr_db):
            resolved = resolve_scenario(cfg.scenario, n, sinr_db)
            m = cfg.m_for(n)
            per_method: dict[str, list[TrialOutcome]] = {name: [] for name in methods}
            failed = False
            for trial in range(cfg.trials):
                try:
                    outcome = run_trial(
                        resolved, n, m, methods, cfg.seed, trial,
                        adaptive_iterations=cfg.adaptive_T, grid=cfg.grid,
                    )
                except (ValueError, ArithmeticError) as exc:
                    failures.append(CellFailure(n, sinr_db, trial, str(exc)))
                    failed = True
                    break
                for name in methods:
                    per_method[name].append(outcome[name])
            for name in methods:
                if failed:
                    rows.append(_failed_row(n, m, sinr_db, name, len(per_method[name])))
                else:
                    rows.append(_aggregate(n, m, sinr_db, name, per_method[name]))

    rows.sort(key=lambda r: (r.n, r.input_sinr_db, r.method))
    return ExperimentResult(rows=tuple(rows), failures=tuple(failures), seed=cfg.seed)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def result_to_csv(result: ExperimentResult) -> str:
    """Render the result as CSV, full precision, LF line endings.

    The first line records the seed so byte comparison covers it.
    """
    lines = [f"# seed={result.seed}", CSV_HEADER]
    for r in result.rows:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    str(r.m),
                    _fmt(r.input_sinr_db),
                    r.method,
                    _fmt(r.mean_output_sinr_db),
                    _fmt(r.std_output_sinr_db),
                    _fmt(r.mean_output_sinr_linear),
                    _fmt(r.mean_alpha),
                    _fmt(r.clamp_rate),
                    str(r.trials),
                ]
            )
        )
    return "\n".join(lines) + "\n"
