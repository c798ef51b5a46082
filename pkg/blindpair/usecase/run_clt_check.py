from logging import getLogger
from typing import Optional

import numpy as np

from blindpair.domain.entities import CltCheckResult, EvalGrid, StudySpec
from blindpair.domain.errors import OutsideDomain
from blindpair.domain.services import asymptotic_sd, forward_minmax, true_cdf

from .run_estimation_study import RunEstimationStudyUseCase


class RunCltCheckUseCase:
    """1点 x0 での sqrt(n)(G1n - G1), sqrt(n)(G2n - G2) の標本分散を極限分散と比べる"""

    def __init__(self, threads: Optional[int] = None):
        self._study = RunEstimationStudyUseCase(threads=threads)
        self._logger = getLogger(__name__)

    def execute(self, spec: StudySpec, x0: float) -> CltCheckResult:
        """
        Args:
            spec (StudySpec): 設定. grid と s_interval は使わない
            x0 (float): 評価点. F1(x0) != F2(x0) であること

        Returns:
            CltCheckResult: 標本分散と極限分散
        """
        point_spec = StudySpec(
            gen1=spec.gen1,
            gen2=spec.gen2,
            n=spec.n,
            reps=spec.reps,
            seed=spec.seed,
            grid=EvalGrid(points=[x0]),
            keep_curves=True,
        )
        result = self._study.execute(point_spec)
        scale = np.sqrt(spec.n)
        lower = scale * (result.curves.g1[:, 0] - result.g1_true[0])
        upper = scale * (result.curves.g2[:, 0] - result.g2_true[0])
        ddof = 1 if spec.reps > 1 else 0

        s, t = forward_minmax(float(true_cdf(spec.gen1, x0)), float(true_cdf(spec.gen2, x0)))
        try:
            asymptotic_lower = asymptotic_sd(s, t, "lower") ** 2
            asymptotic_upper = asymptotic_sd(s, t, "upper") ** 2
        except OutsideDomain:
            self._logger.warning(f"F1 and F2 coincide at x0={x0}; no asymptotic variance")
            asymptotic_lower = asymptotic_upper = float("nan")

        check = CltCheckResult(
            x0=float(x0),
            n=spec.n,
            reps=spec.reps,
            var_lower=float(np.var(lower, ddof=ddof)),
            var_upper=float(np.var(upper, ddof=ddof)),
            asymptotic_var_lower=asymptotic_lower,
            asymptotic_var_upper=asymptotic_upper,
        )
        self._logger.info(
            f"CLT check at x0={x0}: var lower {check.var_lower:.4f} "
            f"(asymptotic {asymptotic_lower:.4f}), var upper {check.var_upper:.4f} "
            f"(asymptotic {asymptotic_upper:.4f})"
        )
        return check


def run_clt_check(spec: StudySpec, x0: float, threads: Optional[int] = None) -> CltCheckResult:
    return RunCltCheckUseCase(threads=threads).execute(spec, x0)
