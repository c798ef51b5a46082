import logging
import logging.config
import sys
from pathlib import Path
from typing import Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

_DEFAULT_LOG_CONFIG = Path(__file__).resolve().parent.parent / "config" / "logging.toml"


def setup_logging(level: str = "INFO", config_path: Optional[Path] = None) -> None:
    """logging.toml の dictConfig を読み込み、root のレベルを上書きする

    Args:
        level (str): root logger のレベル
        config_path (Optional[Path]): 設定ファイル. None の場合はパッケージ同梱のもの
    """
    path = config_path or _DEFAULT_LOG_CONFIG
    with open(path, "rb") as f:
        config = tomllib.load(f)["logger"]
    logging.config.dictConfig(config)
    logging.getLogger().setLevel(level.upper())


def setup_function_logger(function_name: str) -> logging.Logger:
    """関数ごとの実行時間ロガーを設定"""
    logger = logging.getLogger(f"performance.{function_name}")
    logger.setLevel(logging.INFO)
    logger.propagate = False

    # 既存のハンドラをクリア
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
        handler.close()

    log_dir = Path("logs/performance")
    log_dir.mkdir(parents=True, exist_ok=True)

    # 実行ごとに追記する (列: 時刻, 件数, 秒)
    log_file = log_dir / f"{function_name}.csv"
    handler = logging.FileHandler(log_file)
    formatter = logging.Formatter(
        "%(asctime)s,%(message)s", datefmt="%Y-%m-%d %H:%M:%S"
    )
    handler.setFormatter(formatter)
    logger.addHandler(handler)

    return logger
