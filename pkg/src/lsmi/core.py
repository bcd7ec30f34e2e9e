"""LSMI filters and the iterative loading-factor optimizer.

Three weight rules live here:

* the optimum filter R^{-1} s for a known covariance,
* the loaded sample matrix inversion (LSMI) filter (R_hat + alpha I)^{-1} s,
* the iterative, data-dependent choice of the loading factor alpha.

The iteration linearizes the loaded weights around the current alpha,
minimizes a Lagrangian cost for the output-power-under-unit-gain problem
in closed form, and repeats; it starts from alpha equal to the white
noise power.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import (
    add_scaled_identity,
    hermitian_factor,
    inner,
    solve,
)

__all__ = [
    "CovarianceMatrix",
    "LoadingTrace",
    "LinearizedStep",
    "EmptySampleError",
    "ZeroWeightsError",
    "DegenerateGeometryError",
    "sample_covariance",
    "loaded_weights",
    "optimal_weights",
    "fixed_loading_weights",
    "rayleigh_quotient",
    "linearized_step",
    "iterative_loading",
    "FIXED_LOADING_MULTIPLIER",
]

# Classic heuristic: load 10 dB above the white noise floor.
FIXED_LOADING_MULTIPLIER = 10.0

# Denominators this small relative to their Cauchy-Schwarz bound indicate
# invalid input geometry, not roundoff.
DEGENERACY_TOL = 1e-14

# lambda and alpha are real for Hermitian PSD input; residues above this
# (relative) mean something upstream is broken.
IMAG_RESIDUE_TOL = 1e-8


class EmptySampleError(ValueError):
    """Training sample has no snapshots."""


class ZeroWeightsError(ValueError):
    """Weight vector has zero norm, Rayleigh quotient undefined."""


class DegenerateGeometryError(ValueError):
    """A denominator of the closed-form loading step vanished."""

    def __init__(self, message: str, iteration: int | None = None):
        self.iteration = iteration
        if iteration is not None:
            message = f"{message} (iteration {iteration})"
        super().__init__(message)


@dataclass(frozen=True)
class CovarianceMatrix:
    """An N x N Hermitian PSD covariance with its role and noise floor.

    role is one of "true_R", "sample_R", "loaded_R".
    """

    matrix: np.ndarray
    role: str
    noise_power: float

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class LoadingTrace:
    """Per-iteration record of the loading-factor optimization.

    alphas has length T + 1 (alpha_1 ... alpha_{T+1}); lambdas and clamped
    have length T. final_weights uses alpha_T, the last value actually
    applied inside the loop; alpha_{T+1} is kept for inspection.
    clamped[i] is True when the raw step value was adjusted, either by
    the range clamp or by the magnitude projection of a negative value.
    """

    alphas: np.ndarray
    lambdas: np.ndarray
    final_weights: np.ndarray
    iterations: int
    clamped: np.ndarray

    @property
    def final_alpha(self) -> float:
        """The loading factor the final weights were computed with (alpha_T)."""
        return float(self.alphas[-2])

    @property
    def clamp_fired(self) -> bool:
        return bool(self.clamped.any())


class LinearizedStep(NamedTuple):
    lam: float
    alpha_next: float
    clamped: bool


def _matrix_of(r) -> np.ndarray:
    return r.matrix if isinstance(r, CovarianceMatrix) else np.asarray(r, dtype=np.complex128)


def _real_part(z: complex, what: str) -> float:
    scale = max(abs(z), 1e-300)
    if abs(z.imag) > IMAG_RESIDUE_TOL * scale:
        raise ValueError(
            f"{what} has imaginary residue {z.imag:.3e} relative to {scale:.3e}"
        )
    return z.real


def sample_covariance(sample) -> CovarianceMatrix:
    """Maximum-likelihood covariance (1/M) X X^H from N x M snapshots.

    Accepts a TrainingSample or a bare N x M complex array.
    """
    x = np.asarray(getattr(sample, "snapshots", sample), dtype=np.complex128)
    if x.ndim == 1:
        x = x[:, None]
    if x.shape[1] < 1 or x.size == 0:
        raise EmptySampleError("need at least one snapshot")
    m = x.shape[1]
    r = (x @ x.conj().T) / m
    r = 0.5 * (r + r.conj().T)
    return CovarianceMatrix(matrix=r, role="sample_R", noise_power=0.0)


def loaded_weights(r_hat, alpha: float, s) -> np.ndarray:
    """LSMI weights (R_hat + alpha I)^{-1} s, no normalization.

    Raises NotPositiveDefiniteError when the loading is too small for a
    singular sample covariance (e.g. alpha = 0 with M < N).
    """
    loaded = add_scaled_identity(_matrix_of(r_hat), alpha)
    return solve(hermitian_factor(loaded), np.asarray(s, dtype=np.complex128))


def optimal_weights(r, s) -> np.ndarray:
    """Optimum filter R^{-1} s for a known positive definite covariance."""
    return solve(hermitian_factor(_matrix_of(r)), np.asarray(s, dtype=np.complex128))


def fixed_loading_weights(r_hat, s, noise_power: float) -> np.ndarray:
    """LSMI with the fixed heuristic loading, alpha = 10 * noise power."""
    if noise_power <= 0:
        raise ValueError("noise_power must be positive")
    return loaded_weights(r_hat, FIXED_LOADING_MULTIPLIER * noise_power, s)


def rayleigh_quotient(w, s, r, signal_power: float) -> float:
    """Output SINR sigma_s^2 |w^H s|^2 / (w^H R w).

    The Rayleigh quotient itself is scale-free in w; the signal power
    factor makes the value an absolute output SINR.
    """
    w = np.asarray(w, dtype=np.complex128)
    s = np.asarray(s, dtype=np.complex128)
    if not np.any(w):
        raise ZeroWeightsError("weight vector is zero")
    num = abs(inner(w, s)) ** 2
    den = inner(w, _matrix_of(r) @ w).real
    return signal_power * num / den


def linearized_step(w, v, s, alpha_max: float = np.inf) -> LinearizedStep:
    """One closed-form update of the loading factor.

    w and v are the once- and twice-whitened steering vectors
    (R'^{-1} s and R'^{-2} s at the current loading). Returns the
    Lagrange multiplier, the next loading factor (clamped to
    [-alpha_max, alpha_max]), and whether the clamp fired. Negative
    values are legitimate: under training-sample contamination the
    unit-gain constraint demands large-magnitude loading, and a large
    |alpha| of either sign steers the weights toward the matched
    filter while the interference subspace stays suppressed.
    """
    w = np.asarray(w, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    s = np.asarray(s, dtype=np.complex128)

    w_h_v = inner(w, v)
    s_h_v = inner(s, v)
    v_h_w = inner(v, w)
    # relative to the Cauchy-Schwarz bound: the absolute scale of these
    # products shrinks as fast as the covariance entries grow
    norm_s = np.linalg.norm(s)
    norm_v = np.linalg.norm(v)
    norm_w = np.linalg.norm(w)
    if abs(s_h_v) <= DEGENERACY_TOL * norm_s * norm_v:
        raise DegenerateGeometryError("s^H v vanishes")
    if abs(v_h_w) <= DEGENERACY_TOL * norm_v * norm_w:
        raise DegenerateGeometryError("v^H w vanishes")

    w_h_s = inner(w, s)
    w_h_w = inner(w, w)
    v_h_s = inner(v, s)

    lam_c = -1.0 - (2.0 * w_h_v * (1.0 - w_h_s) + w_h_w * v_h_s) / abs(s_h_v) ** 2
    lam = _real_part(lam_c, "lambda")
    alpha_c = (w_h_w + v_h_s + lam * v_h_s) / (2.0 * v_h_w)
    alpha = _real_part(alpha_c, "alpha")

    clamped = abs(alpha) > alpha_max
    alpha = min(max(alpha, -alpha_max), alpha_max)
    return LinearizedStep(lam=lam, alpha_next=alpha, clamped=clamped)


def iterative_loading(r_hat, s, noise_power: float, iterations: int) -> LoadingTrace:
    """Run the iterative loading-factor optimization.

    Starts from alpha_1 = noise_power; each iteration solves for the
    whitened vectors at the current alpha and applies `linearized_step`.
    The signed step output is projected to its magnitude before it is
    applied: the unit-gain constraint turns negative exactly when the
    whitened signal gain drops below one (contaminated or strongly
    interfered training data), and loading by |alpha| steers the
    weights toward the matched filter just as the signed value would,
    without losing positive definiteness of the loaded matrix.
    The final weights are formed with the last alpha used inside the
    loop (alpha_T); alpha_{T+1} is stored but unused.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if noise_power <= 0:
        raise ValueError("noise_power must be positive")
    r = _matrix_of(r_hat)
    s = np.asarray(s, dtype=np.complex128)
    n = r.shape[0]
    # Loading beyond ~100x the average eigenvalue only pushes w toward s.
    alpha_max = 100.0 * float(np.trace(r).real) / n

    alphas = [float(noise_power)]
    lambdas: list[float] = []
    clamped: list[bool] = []
    w = np.empty(0)
    for i in range(iterations):
        factor = hermitian_factor(add_scaled_identity(r, alphas[i]))
        w = solve(factor, s)
        v = solve(factor, w)
        try:
            step = linearized_step(w, v, s, alpha_max=alpha_max)
        except DegenerateGeometryError as exc:
            raise DegenerateGeometryError(str(exc), iteration=i + 1) from exc
        lambdas.append(step.lam)
        clamped.append(step.clamped or step.alpha_next < 0.0)
        alphas.append(abs(step.alpha_next))

    # w from the last pass already is (R_hat + alpha_T I)^{-1} s.
    return LoadingTrace(
        alphas=np.array(alphas),
        lambdas=np.array(lambdas),
        final_weights=w,
        iterations=iterations,
        clamped=np.array(clamped, dtype=bool),
    )
