import time
from dataclasses import dataclass
from logging import getLogger
from typing import Optional

from blindpair.config import settings
from blindpair.domain.entities import PillowConfig, PillowSample
from blindpair.domain.repositories import IPillowCacheRepository
from blindpair.domain.services import generate
from blindpair.utils.logger import setup_function_logger


@dataclass
class GeneratePillowSampleResult:
    """
    PillowSample の生成結果

    Attributes:
        sample (PillowSample): 生成 (またはキャッシュから読み込み) した標本
        cache_hit (bool): キャッシュから読み込んだか
    """

    sample: PillowSample
    cache_hit: bool


class GeneratePillowSampleUseCase:
    """対称化した Brownian pillow の sup の標本を生成する. キャッシュがあればそれを使う"""

    def __init__(
        self,
        cache_repository: Optional[IPillowCacheRepository] = None,
        threads: Optional[int] = None,
    ):
        self._cache_repository = cache_repository
        self._threads = threads
        self._logger = getLogger(__name__)

    def execute(self, config: PillowConfig) -> GeneratePillowSampleResult:
        if self._cache_repository is not None:
            cached = self._cache_repository.load(config)
            if cached is not None:
                self._logger.info(f"pillow cache hit: {config.cache_key()}")
                return GeneratePillowSampleResult(sample=cached, cache_hit=True)
            self._logger.info(f"pillow cache miss: {config.cache_key()}")

        start_time = time.time()
        sample = generate(config, threads=self._threads)
        elapsed = time.time() - start_time
        self._logger.info(
            f"generated {config.reps} pillow replicates (m={config.m}) in {elapsed:.2f} sec"
        )
        if settings.PERF_LOG:
            setup_function_logger("generate_pillow_sample").info(
                f"{config.m},{config.reps},{elapsed:.3f}"
            )

        if self._cache_repository is not None:
            self._cache_repository.save(sample)
        return GeneratePillowSampleResult(sample=sample, cache_hit=False)
