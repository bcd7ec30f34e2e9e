"""Command-line front end: run sweeps from a TOML config, emit CSV and SVG.

Exit codes: 0 success, 1 config/usage error, 2 runtime failure.
Diagnostics go to stderr; data only to files.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from importlib import resources
from pathlib import Path

from .config import ConfigError, load_config
from .experiment import run_experiment, result_to_csv
from .plots import write_panels

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2

DEMO_TRIALS = 50


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsmi",
        description="LSMI adaptive-loading Monte-Carlo simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run an experiment from a config file")
    run_p.add_argument("config", type=Path)
    run_p.add_argument("--out-dir", type=Path, default=Path("."))
    run_p.add_argument("--seed", type=int, default=None,
                       help="override the config seed")
    run_p.add_argument("--format", choices=("csv", "csv+svg"), default="csv")

    val_p = sub.add_parser("validate", help="check a config without running")
    val_p.add_argument("config", type=Path)

    demo_p = sub.add_parser(
        "demo",
        help=f"write the bundled reference config and run it with {DEMO_TRIALS} trials",
    )
    demo_p.add_argument("--out-dir", type=Path, default=Path("lsmi-demo"))
    return parser


def _bundled_config_text() -> str:
    return resources.files("lsmi").joinpath("data/reproduction.toml").read_text("utf-8")


def _execute(cfg, out_dir: Path, fmt: str) -> int:
    result = run_experiment(cfg)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "results.csv"
    with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(result_to_csv(result))
    print(f"wrote {csv_path}", file=sys.stderr)
    if fmt == "csv+svg":
        for path in write_panels(result, out_dir):
            print(f"wrote {path}", file=sys.stderr)
    if result.failures:
        for f in result.failures:
            print(
                f"cell failed: n={f.n} input_sinr_db={f.input_sinr_db} "
                f"trial={f.trial_index}: {f.message}",
                file=sys.stderr,
            )
        return EXIT_RUNTIME
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; remap to the config-error code
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG

    if args.command == "validate":
        try:
            load_config(args.config)
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        print(f"{args.config}: ok", file=sys.stderr)
        return EXIT_OK

    if args.command == "run":
        try:
            cfg = load_config(args.config)
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        if args.seed is not None:
            cfg = dataclasses.replace(cfg, seed=args.seed)
        return _execute(cfg, args.out_dir, args.format)

    if args.command == "demo":
        args.out_dir.mkdir(parents=True, exist_ok=True)
        config_path = args.out_dir / "reproduction.toml"
        config_path.write_text(_bundled_config_text(), encoding="utf-8")
        print(f"wrote {config_path}", file=sys.stderr)
        try:
            cfg = load_config(config_path)
        except ConfigError as exc:  # would mean a broken bundled file
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        cfg = dataclasses.replace(cfg, trials=DEMO_TRIALS)
        return _execute(cfg, args.out_dir, "csv+svg")

    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
