from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional

from blindpair.domain.entities import PillowConfig, PillowSample


class IPillowCacheRepository(ABC):
    """
    PillowSample を (m, reps, seed) をキーに保存しておくためのインターフェース
    """

    @abstractmethod
    def load(self, config: PillowConfig) -> Optional[PillowSample]:
        """
        キャッシュ済みの PillowSample を読み込む

        Args:
            config (PillowConfig): 設定

        Returns:
            Optional[PillowSample]: キャッシュがない場合は None

        Raises:
            CacheMismatch: キャッシュのヘッダが config と一致しない
        """
        raise NotImplementedError

    @abstractmethod
    def save(self, sample: PillowSample) -> Path:
        """
        PillowSample を保存する

        Args:
            sample (PillowSample): 保存する標本

        Returns:
            Path: 保存先
        """
        raise NotImplementedError
