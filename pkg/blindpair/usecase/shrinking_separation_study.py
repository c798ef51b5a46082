from dataclasses import replace
from logging import getLogger
from typing import Optional, Sequence

import numpy as np

from blindpair.domain.entities import (
    GeneratorSpec,
    ShrinkingSeparationResult,
    ShrinkingSeparationRow,
    StudySpec,
)

from .run_estimation_study import RunEstimationStudyUseCase

DEFAULT_LADDER = (250, 1000, 4000, 16000)


def shrinking_gap(n: int, c: float, delta: float) -> float:
    """c * n^-(1/4 - delta)"""
    return c * float(n) ** -(0.25 - delta)


class ShrinkingSeparationStudyUseCase:
    """F1 = x, F2 = x^(1 + gap) で gap を n とともに縮めたときの推定誤差と切り詰め頻度

    誤差は分離幅 F1 - F2 が最大値の半分以上となる grid 点 (縮小する分離領域) 上で測る.
    """

    def __init__(self, threads: Optional[int] = None):
        self._study = RunEstimationStudyUseCase(threads=threads)
        self._logger = getLogger(__name__)

    def execute(
        self,
        base: StudySpec,
        c: float,
        delta: float,
        ladder: Sequence[int] = DEFAULT_LADDER,
    ) -> ShrinkingSeparationResult:
        """
        Args:
            base (StudySpec): reps, seed, grid を使う. gen1, gen2, n は置き換える
            c (float): gap の係数, > 0
            delta (float): 0 < delta <= 1/4. 1/4 なら gap は n によらない
            ladder (Sequence[int]): n の列

        Returns:
            ShrinkingSeparationResult: n ごとに 1 行
        """
        if c <= 0:
            raise ValueError(f"c must be > 0, got {c!r}")
        if not 0.0 < delta <= 0.25:
            raise ValueError(f"delta must lie in (0, 1/4], got {delta!r}")

        points = base.grid.points
        rows = []
        for n in ladder:
            gap = shrinking_gap(n, c, delta)
            clamped = np.clip(points, 0.0, 1.0)
            separation = clamped - clamped ** (1.0 + gap)
            threshold = float(separation.max()) / 2.0
            mask = separation >= threshold
            if threshold <= 0.0:
                mask = np.zeros(len(points), dtype=bool)

            spec = replace(
                base,
                gen1=GeneratorSpec.uniform(),
                gen2=GeneratorSpec.power(1.0 + gap),
                n=int(n),
                s_interval=None,
                keep_curves=False,
            )
            result = self._study.execute(spec, s_mask=mask)
            med1, med2 = result.median_sup_error()
            truncation = float(result.truncation_freq[mask].mean()) if mask.any() else 0.0
            row = ShrinkingSeparationRow(
                n=int(n),
                gap=gap,
                threshold=threshold,
                region_size=int(mask.sum()),
                median_sup_error_g1=med1,
                median_sup_error_g2=med2,
                truncation_freq=truncation,
            )
            self._logger.info(
                f"shrinking separation n={n}: gap={gap:.4f}, region={row.region_size} points, "
                f"truncation {truncation:.3f}"
            )
            rows.append(row)
        return ShrinkingSeparationResult(c=float(c), delta=float(delta), rows=rows)


def shrinking_separation_study(
    base: StudySpec,
    c: float,
    delta: float,
    ladder: Sequence[int] = DEFAULT_LADDER,
    threads: Optional[int] = None,
) -> ShrinkingSeparationResult:
    return ShrinkingSeparationStudyUseCase(threads=threads).execute(base, c, delta, ladder)
