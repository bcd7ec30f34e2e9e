"""TOML experiment configuration loading and validation."""

from __future__ import annotations

import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .experiment import METHODS, ExperimentConfig, GridSpec
from .scenario import InterferenceComponent, ScenarioConfig

__all__ = ["ConfigError", "load_config", "parse_config"]

_TOP_KEYS = {
    "scenario", "n_values", "m_ratio", "input_sinr_db", "trials",
    "seed", "methods", "adaptive_T", "grid",
}
_SCENARIO_KEYS = {
    "prf", "n", "components", "noise_power", "signal_doppler",
    "signal_power", "contaminated", "training_signal_power",
}
_COMPONENT_KEYS = {"center_doppler", "doppler_spread", "power"}
_GRID_KEYS = {"alpha_min_db", "alpha_max_db", "points"}


class ConfigError(ValueError):
    """Config file is unreadable, malformed, or violates an invariant."""


def _check_keys(table: dict, allowed: set, where: str) -> None:
    unknown = set(table) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in {where}: {sorted(unknown)}")


def parse_config(data: dict) -> ExperimentConfig:
    """Build a validated ExperimentConfig from parsed TOML data."""
    _check_keys(data, _TOP_KEYS, "config")
    for key in ("scenario", "n_values", "input_sinr_db", "trials", "seed"):
        if key not in data:
            raise ConfigError(f"missing required key: {key}")

    sc = data["scenario"]
    _check_keys(sc, _SCENARIO_KEYS, "scenario")
    comps = []
    for i, c in enumerate(sc.get("components", [])):
        _check_keys(c, _COMPONENT_KEYS, f"scenario.components[{i}]")
        try:
            comps.append(InterferenceComponent(**c))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"scenario.components[{i}]: {exc}") from exc

    n_values = list(data["n_values"])
    if not n_values:
        raise ConfigError("n_values must be nonempty")
    try:
        template = ScenarioConfig(
            prf=float(sc["prf"]),
            n=int(sc.get("n", max(2, n_values[0]))),
            components=tuple(comps),
            noise_power=float(sc["noise_power"]),
            signal_doppler=float(sc["signal_doppler"]),
            signal_power=float(sc["signal_power"]),
            contaminated=bool(sc.get("contaminated", False)),
            training_signal_power=float(
                sc.get("training_signal_power", sc["signal_power"])
            ),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"scenario: {exc}") from exc

    grid_table = data.get("grid", {})
    _check_keys(grid_table, _GRID_KEYS, "grid")
    grid = GridSpec(
        alpha_min_db=float(grid_table.get("alpha_min_db", -20.0)),
        alpha_max_db=float(grid_table.get("alpha_max_db", 40.0)),
        points=int(grid_table.get("points", 61)),
    )
    if grid.points < 1:
        raise ConfigError("grid.points must be >= 1")

    try:
        return ExperimentConfig(
            scenario=template,
            n_values=tuple(int(v) for v in n_values),
            input_sinr_db=tuple(float(v) for v in data["input_sinr_db"]),
            trials=int(data["trials"]),
            seed=int(data["seed"]),
            methods=tuple(data.get("methods", METHODS)),
            m_ratio=float(data.get("m_ratio", 1.0)),
            adaptive_T=int(data.get("adaptive_T", 3)),
            grid=grid,
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str | Path) -> ExperimentConfig:
    """Read and validate a TOML experiment config file."""
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    try:
        data = tomllib.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    return parse_config(data)
