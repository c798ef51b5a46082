import os
import tempfile
from logging import getLogger
from pathlib import Path
from typing import Optional

import numpy as np

from blindpair.domain.entities import PillowConfig, PillowSample
from blindpair.domain.errors import CacheMismatch
from blindpair.domain.repositories import IPillowCacheRepository

FORMAT_VERSION = 1


class NpzPillowCacheRepository(IPillowCacheRepository):
    """PillowSample を cache_dir/pillow_m{m}_r{reps}_s{seed}.npz に保存する

    ファイルには sup_values と header = [format_version, m, reps, seed] を入れる.
    """

    def __init__(self, cache_dir: Path):
        self._cache_dir = Path(cache_dir)
        self._logger = getLogger(__name__)

    def path_for(self, config: PillowConfig) -> Path:
        return self._cache_dir / f"{config.cache_key()}.npz"

    def load(self, config: PillowConfig) -> Optional[PillowSample]:
        path = self.path_for(config)
        if not path.exists():
            return None
        try:
            with np.load(path) as data:
                header = data["header"].tolist()
                sup_values = data["sup_values"].copy()
        except Exception as e:
            raise CacheMismatch(f"unreadable pillow cache {path}: {e}") from e

        expected = [FORMAT_VERSION, config.m, config.reps, config.seed]
        if header != expected:
            raise CacheMismatch(
                f"pillow cache {path} has header {header}, expected {expected}"
            )
        try:
            return PillowSample(sup_values=sup_values, config=config)
        except ValueError as e:
            raise CacheMismatch(f"pillow cache {path} is corrupt: {e}") from e

    def save(self, sample: PillowSample) -> Path:
        config = sample.config
        path = self.path_for(config)
        self._cache_dir.mkdir(parents=True, exist_ok=True)
        header = np.array([FORMAT_VERSION, config.m, config.reps, config.seed], dtype=np.int64)
        # 一時ファイルに書いてから置き換える
        fd, tmp_name = tempfile.mkstemp(dir=self._cache_dir, suffix=".npz.tmp")
        try:
            with os.fdopen(fd, "wb") as f:
                np.savez(f, sup_values=sample.sup_values, header=header)
            os.replace(tmp_name, path)
        except BaseException:
            Path(tmp_name).unlink(missing_ok=True)
            raise
        self._logger.debug(f"saved pillow sample to {path}")
        return path
