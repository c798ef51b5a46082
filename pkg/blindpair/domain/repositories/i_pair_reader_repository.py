from abc import ABC, abstractmethod
from typing import List, Tuple

from blindpair.domain.entities import EvalGrid


class IPairReaderRepository(ABC):
    @abstractmethod
    def read_rows(self, path: str) -> List[Tuple[float, float]]:
        """
        2 列の数値データを読み込む

        Args:
            path (str): ファイルのパス

        Returns:
            List[Tuple[float, float]]: ファイルの順序のままの行. 数値でない値は NaN

        Raises:
            InputFileError: ファイルが存在しない, 読めない, データ行がない
        """
        raise NotImplementedError

    @abstractmethod
    def read_grid(self, path: str) -> EvalGrid:
        """
        1 列の評価点を読み込む

        Args:
            path (str): ファイルのパス

        Returns:
            EvalGrid: 重複を除いて昇順にした評価点
        """
        raise NotImplementedError
