"""Command-line harness.

    wipe-sim <scenario> [--config FILE] [--set key=value ...] [--out FILE]
             [--mode analytic|numeric|both] [--plot [FILE]]

Exit codes: 0 success, 2 configuration error, 3 numerical-integrity abort.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .config import MODES, SCENARIOS, ConfigError, load_config
from .scenarios import run_scenario, write_csv
from .stepper import TraceDriftError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INTEGRITY = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wipe-sim",
        description="Simulate coherence conservation under rapid environmental dissipation.",
    )
    parser.add_argument("scenario", choices=SCENARIOS)
    parser.add_argument("--config", metavar="FILE", help="flat key = value config file")
    parser.add_argument(
        "--set", metavar="KEY=VALUE", action="append", default=[], dest="overrides",
        help="override a single config key (repeatable)",
    )
    parser.add_argument("--out", metavar="FILE", help="CSV output path")
    parser.add_argument(
        "--mode", choices=MODES,
        help="evaluation path for the qubit_qubit scenario (default: analytic)",
    )
    parser.add_argument(
        "--plot", metavar="FILE", nargs="?", const="",
        help="also render a figure (default: CSV path with .png suffix)",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.scenario, args.config, args.overrides)
        if args.mode is not None:
            cfg = replace(cfg, mode=args.mode).validate()
        out = Path(args.out or cfg.output_path or f"wipe_{cfg.scenario}.csv")
        table = run_scenario(cfg)
    except ConfigError as exc:
        print(f"wipe-sim: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except TraceDriftError as exc:
        print(f"wipe-sim: numerical-integrity abort: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY

    write_csv(table, out)
    print(f"wrote {out} ({table.data.shape[0]} rows, {len(table.columns)} columns)")
    if args.plot is not None:
        from .plotting import render_table

        plot_path = Path(args.plot) if args.plot else out.with_suffix(".png")
        render_table(table, plot_path, scenario=cfg.scenario)
        print(f"wrote {plot_path}")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
