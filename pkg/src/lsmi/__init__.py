"""Loaded sample matrix inversion (LSMI) with data-dependent diagonal
loading, plus the synthetic interference scenario and Monte-Carlo sweep
harness used to compare loading rules by output SINR."""

from .core import (
    CovarianceMatrix,
    LoadingTrace,
    fixed_loading_weights,
    iterative_loading,
    loaded_weights,
    optimal_weights,
    rayleigh_quotient,
    sample_covariance,
)
from .experiment import (
    ExperimentConfig,
    ExperimentResult,
    GridSpec,
    grid_oracle,
    result_to_csv,
    run_experiment,
)
from .scenario import (
    InterferenceComponent,
    ScenarioConfig,
    TrainingSample,
    contaminate,
    draw_snapshots,
    steering_vector,
    true_covariance,
)

__version__ = "0.1.0"

__all__ = [
    "CovarianceMatrix",
    "LoadingTrace",
    "fixed_loading_weights",
    "iterative_loading",
    "loaded_weights",
    "optimal_weights",
    "rayleigh_quotient",
    "sample_covariance",
    "ExperimentConfig",
    "ExperimentResult",
    "GridSpec",
    "grid_oracle",
    "result_to_csv",
    "run_experiment",
    "InterferenceComponent",
    "ScenarioConfig",
    "TrainingSample",
    "contaminate",
    "draw_snapshots",
    "steering_vector",
    "true_covariance",
    "__version__",
]
