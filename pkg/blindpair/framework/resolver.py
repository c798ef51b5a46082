from pathlib import Path
from typing import Optional, Sequence

from ..adapters.infra.numpy import NpzPillowCacheRepository
from ..adapters.infra.pandas import PandasPairReaderRepository
from ..config import settings
from ..domain.entities import (
    DEFAULT_ALPHAS,
    CltCheckResult,
    EvalGrid,
    MarginalEstimate,
    PillowConfig,
    QuantileTable,
    REFERENCE_QUANTILES,
    ShrinkingSeparationResult,
    SizePowerResult,
    StudyResult,
    StudySpec,
    TestReport,
    UnorderedPairSample,
)
from ..domain.services import ingest_pairs, quantiles
from ..usecase import (
    DEFAULT_LADDER,
    EstimateMarginalsUseCase,
    GeneratePillowSampleUseCase,
    RunCltCheckUseCase,
    RunColourBlindTestUseCase,
    RunEstimationStudyUseCase,
    RunSizePowerStudyUseCase,
    ShrinkingSeparationStudyUseCase,
)


class EstimationClient:

    def __init__(self, delimiter: str = ","):
        """EstimationClientの初期化

        Args:
            delimiter (str): 入力CSVの区切り文字
        """
        self._reader = PandasPairReaderRepository(delimiter=delimiter)
        self._estimate_usecase = EstimateMarginalsUseCase()

    def read_sample(self, input_path: str) -> UnorderedPairSample:
        """2列のCSVからサンプルを読み込む

        Args:
            input_path (str): localのファイルパス

        Returns:
            UnorderedPairSample: 各行を (min, max) に並べたサンプル
        """
        return ingest_pairs(self._reader.read_rows(input_path))

    def read_grid(self, grid_path: str) -> EvalGrid:
        return self._reader.read_grid(grid_path)

    def estimate_from_path(
        self,
        input_path: str,
        grid_path: Optional[str] = None,
        isotonic: bool = False,
    ) -> MarginalEstimate:
        """CSVのペアから G1n, G2n を推定する

        Args:
            input_path (str): localのファイルパス
            grid_path (Optional[str]): 評価点のCSV (1列). None の場合は全値
            isotonic (bool): 単調化するか

        Returns:
            MarginalEstimate: 推定結果
        """
        sample = self.read_sample(input_path)
        grid = self.read_grid(grid_path) if grid_path else None
        return self._estimate_usecase.execute(sample, grid=grid, isotonic=isotonic)


class PillowClient:

    def __init__(self, cache_dir: Optional[Path] = None, threads: Optional[int] = None):
        """PillowClientの初期化

        Args:
            cache_dir (Optional[Path]): キャッシュの保存先. None の場合は settings.CACHE_DIR
            threads (Optional[int]): ワーカー数. None の場合は settings.resolved_threads()
        """
        self._cache_repository = NpzPillowCacheRepository(
            cache_dir=Path(cache_dir) if cache_dir else settings.CACHE_DIR
        )
        self._pillow_usecase = GeneratePillowSampleUseCase(
            cache_repository=self._cache_repository,
            threads=threads if threads is not None else settings.resolved_threads(),
        )

    @property
    def pillow_usecase(self) -> GeneratePillowSampleUseCase:
        return self._pillow_usecase

    def quantile_table(
        self, config: PillowConfig, alphas: Sequence[float] = DEFAULT_ALPHAS
    ) -> QuantileTable:
        """pillow の上側分位点の表. config.m が参照値の行と一致すれば参照値も付ける

        Args:
            config (PillowConfig): m, reps, seed
            alphas (Sequence[float]): alpha の列

        Returns:
            QuantileTable: 分位点の表
        """
        sample = self._pillow_usecase.execute(config).sample
        table = quantiles(sample, alphas)
        reference_row = REFERENCE_QUANTILES.get(config.m)
        if reference_row is not None:
            reference = {
                alpha: value
                for alpha, value in zip(DEFAULT_ALPHAS, reference_row)
                if alpha in table.rows
            }
            table = QuantileTable(rows=table.rows, config=table.config, reference=reference)
        return table


class ColourBlindTestClient:

    def __init__(
        self,
        cache_dir: Optional[Path] = None,
        threads: Optional[int] = None,
        delimiter: str = ",",
    ):
        """ColourBlindTestClientの初期化

        Args:
            cache_dir (Optional[Path]): pillow キャッシュの保存先
            threads (Optional[int]): ワーカー数
            delimiter (str): 入力CSVの区切り文字
        """
        self._estimation_client = EstimationClient(delimiter=delimiter)
        self._pillow_client = PillowClient(cache_dir=cache_dir, threads=threads)
        self._test_usecase = RunColourBlindTestUseCase(self._pillow_client.pillow_usecase)

    def test_from_path(
        self,
        input_path: str,
        pillow_config: PillowConfig,
        alphas: Sequence[float] = DEFAULT_ALPHAS,
        alpha: Optional[float] = None,
    ) -> TestReport:
        """CSVのペアに対して H0: F1 = F2 を検定する

        Args:
            input_path (str): localのファイルパス
            pillow_config (PillowConfig): 参照分布の設定
            alphas (Sequence[float]): 報告する分位点
            alpha (Optional[float]): 棄却判定の有意水準

        Returns:
            TestReport: 検定結果
        """
        sample = self._estimation_client.read_sample(input_path)
        return self._test_usecase.execute(sample, pillow_config, alphas=alphas, alpha=alpha)


class SimulationClient:

    def __init__(self, cache_dir: Optional[Path] = None, threads: Optional[int] = None):
        """SimulationClientの初期化

        Args:
            cache_dir (Optional[Path]): pillow キャッシュの保存先 (サイズ・検出力の計算で使う)
            threads (Optional[int]): ワーカー数
        """
        resolved = threads if threads is not None else settings.resolved_threads()
        self._pillow_client = PillowClient(cache_dir=cache_dir, threads=resolved)
        self._estimation_usecase = RunEstimationStudyUseCase(threads=resolved)
        self._clt_usecase = RunCltCheckUseCase(threads=resolved)
        self._size_power_usecase = RunSizePowerStudyUseCase(
            self._pillow_client.pillow_usecase, threads=resolved
        )
        self._shrinking_usecase = ShrinkingSeparationStudyUseCase(threads=resolved)

    def estimation_study(self, spec: StudySpec) -> StudyResult:
        return self._estimation_usecase.execute(spec)

    def clt_check(self, spec: StudySpec, x0: float) -> CltCheckResult:
        return self._clt_usecase.execute(spec, x0)

    def size_power_study(
        self, spec: StudySpec, alpha: float, pillow_config: PillowConfig
    ) -> SizePowerResult:
        return self._size_power_usecase.execute(spec, alpha, pillow_config)

    def shrinking_separation_study(
        self,
        base: StudySpec,
        c: float,
        delta: float,
        ladder: Sequence[int] = DEFAULT_LADDER,
    ) -> ShrinkingSeparationResult:
        return self._shrinking_usecase.execute(base, c, delta, ladder)
