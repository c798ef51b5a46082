import time
from dataclasses import dataclass
from logging import getLogger
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from blindpair.config import settings
from blindpair.domain.entities import StudyCurves, StudyResult, StudySpec, UnorderedPairSample
from blindpair.domain.services import estimate_marginals, run_replicates, sample_ordered_pairs, true_cdf
from blindpair.domain.services.ecdf import count_at_most
from blindpair.domain.services.estimator import true_minmax
from blindpair.utils.logger import setup_function_logger


@dataclass(frozen=True, eq=False)
class _Replicate:
    g1: NDArray[np.float64]
    g2: NDArray[np.float64]
    truncated: NDArray[np.bool_]
    f1n: NDArray[np.float64]
    f2n: NDArray[np.float64]
    f_min_n: NDArray[np.float64]
    f_max_n: NDArray[np.float64]


def _sup_over(errors: NDArray[np.float64], mask: NDArray[np.bool_]) -> NDArray[np.float64]:
    """各行について mask 上の最大値. mask が空なら 0"""
    return np.max(errors, axis=1, where=mask[None, :], initial=0.0)


class RunEstimationStudyUseCase:
    """既知の F1, F2 からペアを生成し, G1n, G2n の一様誤差を反復ごとに記録する"""

    def __init__(self, threads: Optional[int] = None):
        self._threads = threads
        self._logger = getLogger(__name__)

    def _replicate(self, spec: StudySpec, rng: np.random.Generator) -> _Replicate:
        x, y = sample_ordered_pairs(spec.gen1, spec.gen2, spec.n, rng)
        sample = UnorderedPairSample(u=np.minimum(x, y), v=np.maximum(x, y))
        estimate = estimate_marginals(sample, spec.grid)
        points = spec.grid.points
        n = float(spec.n)
        return _Replicate(
            g1=estimate.g1,
            g2=estimate.g2,
            truncated=estimate.truncated,
            f1n=count_at_most(np.sort(x), points) / n,
            f2n=count_at_most(np.sort(y), points) / n,
            f_min_n=count_at_most(np.sort(sample.u), points) / n,
            f_max_n=count_at_most(np.sort(sample.v), points) / n,
        )

    def execute(
        self, spec: StudySpec, s_mask: Optional[NDArray[np.bool_]] = None
    ) -> StudyResult:
        """シミュレーションを実行する

        Args:
            spec (StudySpec): 設定
            s_mask (Optional[NDArray[np.bool_]]): sup 誤差を測る grid 点. None なら spec.s_mask()

        Returns:
            StudyResult: 反復ごとの誤差と grid 上の集計
        """
        mask = spec.s_mask() if s_mask is None else np.asarray(s_mask, dtype=bool)
        if mask.shape != (len(spec.grid),):
            raise ValueError("s_mask must have one entry per grid point")
        if not mask.any():
            self._logger.warning("separation region contains no grid points; sup errors are 0")

        start_time = time.time()
        replicates = run_replicates(
            lambda r, rng: self._replicate(spec, rng),
            seed=spec.seed,
            reps=spec.reps,
            threads=self._threads,
        )
        g1 = np.vstack([rep.g1 for rep in replicates])
        g2 = np.vstack([rep.g2 for rep in replicates])
        truncated = np.vstack([rep.truncated for rep in replicates])
        f1n = np.vstack([rep.f1n for rep in replicates])
        f2n = np.vstack([rep.f2n for rep in replicates])

        f1 = np.asarray(true_cdf(spec.gen1, spec.grid.points), dtype=np.float64)
        f2 = np.asarray(true_cdf(spec.gen2, spec.grid.points), dtype=np.float64)
        g1_true, g2_true = true_minmax(f1, f2)

        curves = None
        if spec.keep_curves:
            curves = StudyCurves(
                g1=g1,
                g2=g2,
                truncated=truncated,
                f1n=f1n,
                f2n=f2n,
                f_min_n=np.vstack([rep.f_min_n for rep in replicates]),
                f_max_n=np.vstack([rep.f_max_n for rep in replicates]),
            )

        result = StudyResult(
            spec=spec,
            sup_error_g1=_sup_over(np.abs(g1 - g1_true), mask),
            sup_error_g2=_sup_over(np.abs(g2 - g2_true), mask),
            oracle_sup_error_f1=_sup_over(np.abs(f1n - f1), mask),
            oracle_sup_error_f2=_sup_over(np.abs(f2n - f2), mask),
            mean_g1=g1.mean(axis=0),
            mean_g2=g2.mean(axis=0),
            truncation_freq=truncated.mean(axis=0),
            g1_true=g1_true,
            g2_true=g2_true,
            curves=curves,
        )
        elapsed = time.time() - start_time
        med1, med2 = result.median_sup_error()
        self._logger.info(
            f"estimation study {spec.gen1.label} vs {spec.gen2.label} n={spec.n} reps={spec.reps}: "
            f"median sup error g1={med1:.4f} g2={med2:.4f} ({elapsed:.2f} sec)"
        )
        if settings.PERF_LOG:
            setup_function_logger("run_estimation_study").info(
                f"{spec.n},{spec.reps},{elapsed:.3f}"
            )
        return result


def run_estimation_study(spec: StudySpec, threads: Optional[int] = None) -> StudyResult:
    return RunEstimationStudyUseCase(threads=threads).execute(spec)
