import math
import time
from logging import getLogger
from typing import Optional

import numpy as np

from blindpair.config import settings
from blindpair.domain.entities import PillowConfig, SizePowerResult, StudySpec, UnorderedPairSample
from blindpair.domain.repositories import IPillowCacheRepository
from blindpair.domain.services import quantiles, run_replicates, sample_ordered_pairs, sup_statistic
from blindpair.utils.logger import setup_function_logger

from .generate_pillow_sample import GeneratePillowSampleUseCase


class RunSizePowerStudyUseCase:
    """既知の F1, F2 の下で検定の棄却率を求める. F1 = F2 ならサイズ, それ以外は検出力"""

    def __init__(
        self,
        pillow_usecase: GeneratePillowSampleUseCase,
        threads: Optional[int] = None,
    ):
        self._pillow_usecase = pillow_usecase
        self._threads = threads
        self._logger = getLogger(__name__)

    def _statistic(self, spec: StudySpec, rng: np.random.Generator) -> float:
        x, y = sample_ordered_pairs(spec.gen1, spec.gen2, spec.n, rng)
        return sup_statistic(UnorderedPairSample(u=np.minimum(x, y), v=np.maximum(x, y)))

    def execute(
        self, spec: StudySpec, alpha: float, pillow_config: PillowConfig
    ) -> SizePowerResult:
        """
        Args:
            spec (StudySpec): 設定. grid と s_interval は使わない
            alpha (float): 有意水準, 0 <= alpha < 1. alpha = 0 は棄却しない
            pillow_config (PillowConfig): 棄却域を決める pillow の設定

        Returns:
            SizePowerResult: 反復ごとの統計量と棄却率
        """
        if not 0.0 <= alpha < 1.0:
            raise ValueError(f"alpha must lie in [0, 1), got {alpha!r}")
        if alpha == 0.0:
            threshold = math.inf
        else:
            reference = self._pillow_usecase.execute(pillow_config).sample
            threshold = quantiles(reference, [alpha]).rows[float(alpha)]

        start_time = time.time()
        statistics = np.asarray(
            run_replicates(
                lambda r, rng: self._statistic(spec, rng),
                seed=spec.seed,
                reps=spec.reps,
                threads=self._threads,
            ),
            dtype=np.float64,
        )
        result = SizePowerResult(
            spec=spec,
            alpha=float(alpha),
            threshold=threshold,
            statistics=statistics,
            rejections=int(np.count_nonzero(statistics > threshold)),
        )
        elapsed = time.time() - start_time
        self._logger.info(
            f"size/power {spec.gen1.label} vs {spec.gen2.label} n={spec.n}: "
            f"rejection rate {result.rejection_rate:.4f} at alpha={alpha} ({elapsed:.2f} sec)"
        )
        if settings.PERF_LOG:
            setup_function_logger("run_size_power_study").info(
                f"{spec.n},{spec.reps},{elapsed:.3f}"
            )
        return result


def run_size_power_study(
    spec: StudySpec,
    alpha: float,
    pillow_cfg: PillowConfig,
    cache_repository: Optional[IPillowCacheRepository] = None,
    threads: Optional[int] = None,
) -> SizePowerResult:
    pillow_usecase = GeneratePillowSampleUseCase(cache_repository=cache_repository, threads=threads)
    return RunSizePowerStudyUseCase(pillow_usecase, threads=threads).execute(spec, alpha, pillow_cfg)
