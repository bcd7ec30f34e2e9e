"""Run a small output-SINR sweep and plot it.

Compares the optimal filter (known covariance), fixed loading at ten
times the noise power, the iterated data-dependent loading, and a
grid oracle, across snapshot dimensions at one interference level.
Writes a CSV table and an SVG panel under demo_output/.
"""

from pathlib import Path

from lsmi import ExperimentConfig, result_to_csv, run_experiment
from lsmi.plots import write_panels
from lsmi.scenario import InterferenceComponent, ScenarioConfig

scenario = ScenarioConfig(
    prf=20_000.0,
    n=8,
    components=(
        InterferenceComponent(0.0, 500.0, 1.0),
        InterferenceComponent(1000.0, 500.0, 1.0),
    ),
    noise_power=1.0,
    signal_doppler=4000.0,
    signal_power=10.0,
)

cfg = ExperimentConfig(
    scenario=scenario,
    n_values=(8, 16, 24, 32),
    input_sinr_db=(0.0,),
    trials=100,
    seed=7,
    methods=("optimal", "fixed", "adaptive", "grid_oracle"),
)

result = run_experiment(cfg)
print(f"{'N':>4} {'method':<12} {'mean SINR (dB)':>15} {'std (dB)':>9}")
for row in result.rows:
    print(f"{row.n:>4} {row.method:<12} {row.mean_output_sinr_db:>15.2f} "
          f"{row.std_output_sinr_db:>9.2f}")

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "sweep.csv").write_text(result_to_csv(result))
paths = write_panels(result, out)
print(f"\nwrote {out / 'sweep.csv'} and {', '.join(str(p) for p in paths)}")
