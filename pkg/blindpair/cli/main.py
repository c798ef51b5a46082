"""blindpair コマンド

    blindpair estimate pairs.csv [--isotonic] [--grid grid.csv] [--format json|csv]
    blindpair test pairs.csv [--m 1000] [--reps 100000] [--alpha 0.05]
    blindpair pillow-quantiles [--m 1000] [--reps 100000]
    blindpair simulate <scenario> [--n N] [--reps R]

機械可読な出力は stdout (または --output), ログは stderr に出す.
"""
import argparse
import sys
from logging import getLogger
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from blindpair.adapters import PandasResultWriterRepository
from blindpair.config import settings
from blindpair.domain.entities import PillowConfig
from blindpair.domain.errors import (
    BadValue,
    CacheMismatch,
    EmptySample,
    InputFileError,
    NumericalNonconvergence,
)
from blindpair.framework.resolver import (
    ColourBlindTestClient,
    EstimationClient,
    PillowClient,
    SimulationClient,
)
from blindpair.utils.logger import setup_logging

from .cli_config import CliConfig
from .scenarios import SCENARIOS, UnknownScenario, get_scenario

logger = getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BAD_VALUE = 3
EXIT_CACHE = 4
EXIT_NUMERICAL = 5


class _Outputs:
    """書き出したファイルを覚えておき, 失敗したときに消す"""

    def __init__(self):
        self._written: List[Path] = []

    def track(self, path: Path) -> Path:
        self._written.append(Path(path))
        return Path(path)

    def emit_json(self, text: str, path: Optional[Path]) -> None:
        if path is None:
            sys.stdout.write(text + "\n")
            sys.stdout.flush()
            return
        self.track(path)
        Path(path).write_text(text + "\n", encoding="utf-8")
        logger.info(f"wrote {path}")

    def remove_all(self) -> None:
        for path in self._written:
            try:
                path.unlink(missing_ok=True)
            except OSError as e:
                logger.warning(f"Failed to remove partial output {path}: {e}")


def _csv_path(cfg: CliConfig, default: Path) -> Path:
    return cfg.output_path if cfg.output_path is not None else default


def _pillow_config(cfg: CliConfig) -> PillowConfig:
    return PillowConfig(m=cfg.m, reps=cfg.reps, seed=cfg.seed)


def _estimate(cfg: CliConfig, outputs: _Outputs) -> None:
    client = EstimationClient(delimiter=cfg.delimiter)
    estimate = client.estimate_from_path(
        str(cfg.input_path),
        grid_path=str(cfg.grid_path) if cfg.grid_path else None,
        isotonic=cfg.isotonic,
    )
    if cfg.format == "csv":
        path = outputs.track(_csv_path(cfg, cfg.input_path.with_suffix(".estimate.csv")))
        PandasResultWriterRepository().write_estimate(estimate, str(path))
        logger.info(f"wrote {path}")
    else:
        outputs.emit_json(estimate.to_json(), cfg.output_path)


def _test(cfg: CliConfig, outputs: _Outputs) -> None:
    client = ColourBlindTestClient(
        cache_dir=cfg.cache_dir, threads=cfg.threads, delimiter=cfg.delimiter
    )
    report = client.test_from_path(
        str(cfg.input_path), _pillow_config(cfg), alphas=cfg.alpha_list, alpha=cfg.alpha
    )
    logger.info(f"statistic: {report.statistic:.5f}")
    logger.info(f"p-value: {report.p_value:.5f}")
    for alpha, q in sorted(report.quantiles.items(), reverse=True):
        logger.info(f"upper quantile alpha={alpha:g}: {q:.4f}")
    if report.reject is not None:
        logger.info(f"reject H0 at alpha={report.alpha:g}: {report.reject}")
    if cfg.format == "csv":
        logger.warning("test writes a JSON report; --format csv is ignored")
    outputs.emit_json(report.to_json(), cfg.output_path)


def _pillow_quantiles(cfg: CliConfig, outputs: _Outputs) -> None:
    config = _pillow_config(cfg)
    table = PillowClient(cache_dir=cfg.cache_dir, threads=cfg.threads).quantile_table(
        config, alphas=cfg.alpha_list
    )
    for line in table.to_text().splitlines():
        logger.info(line)
    if cfg.format == "csv":
        path = outputs.track(_csv_path(cfg, Path(f"{config.cache_key()}.csv")))
        PandasResultWriterRepository().write_quantile_table(table, str(path))
        logger.info(f"wrote {path}")
    else:
        outputs.emit_json(table.to_json(), cfg.output_path)


def _simulate(cfg: CliConfig, outputs: _Outputs) -> None:
    scenario = get_scenario(cfg.scenario)
    grid = EstimationClient(delimiter=cfg.delimiter).read_grid(str(cfg.grid_path)) if cfg.grid_path else None
    spec = scenario.study_spec(seed=cfg.seed, n=cfg.n, reps=cfg.study_reps, grid=grid)
    client = SimulationClient(cache_dir=cfg.cache_dir, threads=cfg.threads)
    writer = PandasResultWriterRepository()

    if scenario.kind == "estimation":
        result = client.estimation_study(spec)
        if cfg.format == "csv":
            path = outputs.track(_csv_path(cfg, Path(f"{scenario.name}.csv")))
            writer.write_study_curves(result, str(path))
            logger.info(f"wrote {path}")
            outputs.emit_json(result.to_json(), None)
        else:
            outputs.emit_json(result.to_json(), cfg.output_path)
    elif scenario.kind == "size_power":
        alpha = cfg.alpha if cfg.alpha is not None else 0.05
        result = client.size_power_study(spec, alpha, _pillow_config(cfg))
        if cfg.format == "csv":
            path = outputs.track(_csv_path(cfg, Path(f"{scenario.name}.csv")))
            writer.write_size_power(result, str(path))
            logger.info(f"wrote {path}")
            outputs.emit_json(result.to_json(), None)
        else:
            outputs.emit_json(result.to_json(), cfg.output_path)
    elif scenario.kind == "shrinking":
        result = client.shrinking_separation_study(spec, cfg.c, cfg.delta)
        if cfg.format == "csv":
            path = outputs.track(_csv_path(cfg, Path(f"{scenario.name}.csv")))
            writer.write_shrinking(result, str(path))
            logger.info(f"wrote {path}")
            outputs.emit_json(result.to_json(), None)
        else:
            outputs.emit_json(result.to_json(), cfg.output_path)
    else:
        result = client.clt_check(spec, cfg.x0)
        if cfg.format == "csv":
            path = outputs.track(_csv_path(cfg, Path(f"{scenario.name}.csv")))
            writer.write_clt_check(result, str(path))
            logger.info(f"wrote {path}")
            outputs.emit_json(result.to_json(), None)
        else:
            outputs.emit_json(result.to_json(), cfg.output_path)


def _run(cfg: CliConfig, body: Callable[[CliConfig, _Outputs], None]) -> int:
    outputs = _Outputs()
    try:
        body(cfg, outputs)
        return EXIT_OK
    except BadValue as e:
        if e.row_index >= 0:
            logger.error(f"malformed value in data row {e.row_index + 1}: {e}")
        else:
            logger.error(f"malformed value: {e}")
        status = EXIT_BAD_VALUE
    except (InputFileError, EmptySample) as e:
        logger.error(f"{type(e).__name__}: {e}")
        status = EXIT_INPUT
    except UnknownScenario as e:
        logger.error(f"unknown scenario {e.args[0]!r}; choose from {', '.join(SCENARIOS)}")
        status = EXIT_INPUT
    except CacheMismatch as e:
        logger.error(f"pillow cache mismatch: {e}")
        status = EXIT_CACHE
    except NumericalNonconvergence as e:
        logger.error(f"numerical failure: {e}")
        status = EXIT_NUMERICAL
    except BaseException:
        outputs.remove_all()
        raise
    outputs.remove_all()
    return status


def cmd_estimate(cfg: CliConfig) -> int:
    return _run(cfg, _estimate)


def cmd_test(cfg: CliConfig) -> int:
    return _run(cfg, _test)


def cmd_pillow_quantiles(cfg: CliConfig) -> int:
    return _run(cfg, _pillow_quantiles)


def cmd_simulate(cfg: CliConfig) -> int:
    return _run(cfg, _simulate)


COMMANDS: Dict[str, Callable[[CliConfig], int]] = {
    "estimate": cmd_estimate,
    "test": cmd_test,
    "pillow-quantiles": cmd_pillow_quantiles,
    "simulate": cmd_simulate,
}


def _alpha_list(value: str) -> List[float]:
    try:
        return [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {value!r}")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed", type=int, help="random seed (default: $BLINDPAIR_SEED or 0)"
    )
    parser.add_argument(
        "--threads",
        type=int,
        help="worker threads; results do not depend on it (default: $BLINDPAIR_THREADS or CPU count)",
    )
    parser.add_argument(
        "--output", dest="output_path", type=Path, help="output file (default: stdout for JSON)"
    )
    parser.add_argument(
        "--format", choices=["json", "csv"], default="json", help="output format (default: %(default)s)"
    )
    parser.add_argument(
        "--log-level",
        default=None,
        help="log level (default: $BLINDPAIR_LOG_LEVEL or INFO)",
    )


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input_path", type=Path, help="CSV with two numeric columns, optional header")
    parser.add_argument(
        "--delimiter", default=",", help="CSV delimiter (default: %(default)r)"
    )


def _add_pillow(parser: argparse.ArgumentParser, reps_flag: str = "--reps") -> None:
    parser.add_argument("--m", type=int, default=1000, help="pillow lattice size (default: %(default)s)")
    parser.add_argument(
        reps_flag,
        dest="reps",
        type=int,
        default=100_000,
        help="pillow Monte Carlo replications (default: %(default)s)",
    )
    parser.add_argument(
        "--cache-dir",
        type=Path,
        help="pillow cache directory (default: $BLINDPAIR_CACHE_DIR or ~/.cache/blindpair)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blindpair",
        description="Marginal CDF estimation and testing for pairs with unobserved order",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    estimate = sub.add_parser("estimate", help="estimate G1 = min(F1, F2) and G2 = max(F1, F2)")
    _add_input(estimate)
    estimate.add_argument(
        "--grid", dest="grid_path", type=Path, help="one-column CSV of evaluation points (default: all pooled values)"
    )
    estimate.add_argument(
        "--isotonic", action="store_true", help="make g1 and g2 nondecreasing (default: off)"
    )
    _add_common(estimate)

    test = sub.add_parser("test", help="test H0: F1 = F2")
    _add_input(test)
    _add_pillow(test)
    test.add_argument(
        "--alpha-list",
        type=_alpha_list,
        default=[0.1, 0.05, 0.01],
        help="alphas of the reported upper quantiles (default: 0.1,0.05,0.01)",
    )
    test.add_argument("--alpha", type=float, help="flag rejection at this level (default: none)")
    _add_common(test)

    pillow = sub.add_parser("pillow-quantiles", help="Monte Carlo upper quantiles of the pillow sup")
    _add_pillow(pillow)
    pillow.add_argument(
        "--alpha",
        dest="alpha_list",
        type=_alpha_list,
        default=[0.1, 0.05, 0.01],
        help="comma-separated alphas (default: 0.1,0.05,0.01)",
    )
    _add_common(pillow)

    scenario_help = "; ".join(f"{s.name}: {s.description}" for s in SCENARIOS.values())
    simulate = sub.add_parser("simulate", help="run a simulation scenario")
    simulate.add_argument("scenario", help=scenario_help)
    simulate.add_argument("--n", type=int, help="pairs per replicate (default: scenario value)")
    simulate.add_argument(
        "--reps", dest="study_reps", type=int, help="replicates (default: scenario value)"
    )
    simulate.add_argument(
        "--grid", dest="grid_path", type=Path, help="one-column CSV of evaluation points (default: 201 points on [0, 1])"
    )
    simulate.add_argument(
        "--alpha", type=float, help="size/power scenarios: significance level (default: 0.05)"
    )
    simulate.add_argument("--c", type=float, default=1.0, help="shrinking: gap coefficient (default: %(default)s)")
    simulate.add_argument(
        "--delta", type=float, default=0.125, help="shrinking: gap exponent offset in (0, 1/4] (default: %(default)s)"
    )
    simulate.add_argument("--x0", type=float, default=0.5, help="clt: evaluation point (default: %(default)s)")
    _add_pillow(simulate, reps_flag="--pillow-reps")
    _add_common(simulate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_CONFIG)
    try:
        cfg = CliConfig.from_args(args)
    except ValidationError as e:
        logger.error(f"invalid arguments: {e}")
        return EXIT_BAD_VALUE
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
