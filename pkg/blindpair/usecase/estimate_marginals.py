from logging import getLogger
from typing import Optional

from blindpair.domain.entities import EvalGrid, MarginalEstimate, UnorderedPairSample
from blindpair.domain.services import estimate_marginals, estimate_to_isotonic


class EstimateMarginalsUseCase:
    """順序の見えないペアから G1 = min{F1, F2}, G2 = max{F1, F2} を推定する"""

    def __init__(self):
        self._logger = getLogger(__name__)

    def execute(
        self,
        sample: UnorderedPairSample,
        grid: Optional[EvalGrid] = None,
        isotonic: bool = False,
    ) -> MarginalEstimate:
        """推定を実行する

        Args:
            sample (UnorderedPairSample): サンプル
            grid (Optional[EvalGrid]): 評価点. None の場合は全値 (重複なし)
            isotonic (bool): g1, g2 を単調化するか

        Returns:
            MarginalEstimate: 推定結果
        """
        estimate = estimate_marginals(sample, grid)
        truncated = int(estimate.truncated.sum())
        self._logger.info(
            f"estimated marginals for n={sample.n} on {len(estimate.grid)} grid points "
            f"({truncated} truncated)"
        )
        if isotonic:
            estimate = estimate_to_isotonic(estimate)
        return estimate
