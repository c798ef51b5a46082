import os
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


def _get_env_file() -> str:
    ret = os.path.join(os.path.dirname(__file__), "../.env")
    return ret


class Settings(BaseSettings):
    """環境変数 (prefix: BLINDPAIR_) と .env から読み込む設定"""

    model_config = SettingsConfigDict(
        env_prefix="BLINDPAIR_",
        env_file=_get_env_file(),
        env_ignore_empty=False,
        extra="ignore",
    )
    SEED: int = 0
    CACHE_DIR: Path = Path.home() / ".cache" / "blindpair"
    # None の場合は os.cpu_count() を使う
    THREADS: Optional[int] = None
    LOG_LEVEL: str = "INFO"
    LOG_CONFIG: Optional[Path] = None
    PERF_LOG: bool = False

    def resolved_threads(self) -> int:
        return self.THREADS or os.cpu_count() or 1


settings = Settings()
