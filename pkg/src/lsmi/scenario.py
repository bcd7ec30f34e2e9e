"""Synthetic slow-time radar interference scenario.

Builds the true interference-plus-noise covariance for a pulse train
(Gaussian Doppler spectra make the autocorrelation a Gaussian of lag),
generates colored Gaussian training snapshots from it, and optionally
injects the useful signal into the training sample with Rayleigh
amplitude and uniform phase.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, replace

import numpy as np

from .core import CovarianceMatrix
from .linalg import DimensionMismatchError, hermitian_factor

__all__ = [
    "InterferenceComponent",
    "ScenarioConfig",
    "TrainingSample",
    "steering_vector",
    "true_covariance",
    "draw_snapshots",
    "contaminate",
    "substream",
]


@dataclass(frozen=True)
class InterferenceComponent:
    """One interference source in Doppler.

    doppler_spread is the standard deviation (sigma) of the Gaussian
    spectral envelope, not its FWHM or full width.
    """

    center_doppler: float  # Hz
    doppler_spread: float  # Hz
    power: float  # linear

    def __post_init__(self):
        if self.doppler_spread < 0:
            raise ValueError("doppler_spread must be >= 0")
        if self.power < 0:
            raise ValueError("power must be >= 0")


@dataclass(frozen=True)
class ScenarioConfig:
    prf: float  # Hz
    n: int  # pulses per snapshot
    components: tuple[InterferenceComponent, ...]
    noise_power: float  # sigma_n^2, linear
    signal_doppler: float  # Hz
    signal_power: float  # sigma_s^2, linear
    contaminated: bool = False
    training_signal_power: float = 0.0  # linear, power of leaked signal

    def __post_init__(self):
        if self.prf <= 0:
            raise ValueError("prf must be positive")
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.noise_power <= 0:
            raise ValueError("noise_power must be positive")
        if self.signal_power < 0:
            raise ValueError("signal_power must be >= 0")
        if self.training_signal_power < 0:
            raise ValueError("training_signal_power must be >= 0")
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def interference_power(self) -> float:
        return sum(c.power for c in self.components)

    def with_interference_power(self, total: float) -> "ScenarioConfig":
        """Rescale component powers to the given total, keeping their ratios."""
        current = self.interference_power
        if current <= 0:
            raise ValueError("no interference power to rescale")
        scale = total / current
        comps = tuple(replace(c, power=c.power * scale) for c in self.components)
        return replace(self, components=comps)


@dataclass(frozen=True)
class TrainingSample:
    n: int
    m: int
    snapshots: np.ndarray  # N x M
    contaminated: bool = False

    def __post_init__(self):
        if self.snapshots.shape != (self.n, self.m):
            raise DimensionMismatchError(
                f"snapshots shape {self.snapshots.shape} != ({self.n}, {self.m})"
            )


def steering_vector(doppler: float, prf: float, n: int) -> np.ndarray:
    """Temporal steering vector: unit-modulus Doppler phase ramp over n pulses."""
    if prf <= 0:
        raise ValueError("prf must be positive")
    k = np.arange(n)
    return np.exp(2j * np.pi * doppler * k / prf)


def true_covariance(cfg: ScenarioConfig) -> CovarianceMatrix:
    """Exact interference-plus-noise covariance of the scenario.

    A Gaussian power spectrum with std sigma_f centered at f_c has
    autocorrelation exp(-2 pi^2 sigma_f^2 tau^2) exp(j 2 pi f_c tau);
    summing components and adding the white noise floor gives a
    Hermitian Toeplitz positive definite matrix.
    """
    k = np.arange(cfg.n)
    tau = (k[:, None] - k[None, :]) / cfg.prf
    r = np.zeros((cfg.n, cfg.n), dtype=np.complex128)
    for comp in cfg.components:
        envelope = np.exp(-2.0 * np.pi**2 * comp.doppler_spread**2 * tau**2)
        r += comp.power * envelope * np.exp(2j * np.pi * comp.center_doppler * tau)
    r[np.diag_indices(cfg.n)] += cfg.noise_power
    r = 0.5 * (r + r.conj().T)
    return CovarianceMatrix(matrix=r, role="true_R", noise_power=cfg.noise_power)


def draw_snapshots(r, m: int, rng: np.random.Generator) -> TrainingSample:
    """Draw m independent snapshots from a zero-mean circular complex
    Gaussian with the given covariance (via its Cholesky factor)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    matrix = r.matrix if isinstance(r, CovarianceMatrix) else np.asarray(r)
    factor = hermitian_factor(matrix)
    n = factor.dim
    z = (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2.0)
    return TrainingSample(n=n, m=m, snapshots=factor.lower @ z)


def contaminate(
    sample: TrainingSample, s, power: float, rng: np.random.Generator
) -> TrainingSample:
    """Add the useful signal to every snapshot.

    Each column gains a_i e^{j phi_i} s with Rayleigh amplitude
    (E[a^2] = power) and uniform phase, i.e. a circular complex normal
    coefficient of variance `power`.
    """
    if power < 0:
        raise ValueError("power must be >= 0")
    s = np.asarray(s, dtype=np.complex128)
    if s.shape[0] != sample.n:
        raise DimensionMismatchError(
            f"steering length {s.shape[0]} vs sample dim {sample.n}"
        )
    g = np.sqrt(power / 2.0) * (
        rng.standard_normal(sample.m) + 1j * rng.standard_normal(sample.m)
    )
    return TrainingSample(
        n=sample.n,
        m=sample.m,
        snapshots=sample.snapshots + s[:, None] * g[None, :],
        contaminated=True,
    )


def substream(seed: int, trial_index: int, purpose: str) -> np.random.Generator:
    """Independent RNG stream keyed by (master seed, trial, purpose tag).

    Adding a purpose or reordering draws inside one purpose never
    perturbs the streams of the others.
    """
    tag = zlib.crc32(purpose.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence([seed, trial_index, tag]))
