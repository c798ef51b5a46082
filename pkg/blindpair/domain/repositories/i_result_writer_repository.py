from abc import ABC, abstractmethod

from blindpair.domain.entities import (
    CltCheckResult,
    MarginalEstimate,
    QuantileTable,
    ShrinkingSeparationResult,
    SizePowerResult,
    StudyResult,
)


class IResultWriterRepository(ABC):
    @abstractmethod
    def write_estimate(self, estimate: MarginalEstimate, path: str) -> str:
        """
        MarginalEstimate を long-format の CSV (x, g1, g2, d_n, truncated) に書き出す

        Args:
            estimate (MarginalEstimate): 推定結果
            path (str): 出力パス

        Returns:
            str: 出力パス
        """
        raise NotImplementedError

    @abstractmethod
    def write_study_curves(self, result: StudyResult, path: str) -> str:
        """
        StudyResult の反復ごとの曲線を long-format の CSV に書き出す

        列は rep, x, g1, g2, truncated の後に参照用の曲線が続く.

        Args:
            result (StudyResult): 結果
            path (str): 出力パス

        Returns:
            str: 出力パス
        """
        raise NotImplementedError

    @abstractmethod
    def write_shrinking(self, result: ShrinkingSeparationResult, path: str) -> str:
        """
        縮小する分離領域の実験結果を n ごとに 1 行の CSV に書き出す
        """
        raise NotImplementedError

    @abstractmethod
    def write_quantile_table(self, table: QuantileTable, path: str) -> str:
        """
        分位点の表を alpha ごとに 1 行の CSV (alpha, quantile[, reference]) に書き出す
        """
        raise NotImplementedError

    @abstractmethod
    def write_size_power(self, result: SizePowerResult, path: str) -> str:
        """
        サイズ・検出力の実験の統計量を反復ごとに 1 行の CSV (rep, statistic, rejected) に書き出す
        """
        raise NotImplementedError

    @abstractmethod
    def write_clt_check(self, result: CltCheckResult, path: str) -> str:
        """
        CLT の確認結果を 1 行の CSV に書き出す. 漸近分散が定義されない場合は空欄
        """
        raise NotImplementedError
