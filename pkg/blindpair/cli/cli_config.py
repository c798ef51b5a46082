import argparse
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from blindpair.config import Settings, settings
from blindpair.domain.entities import DEFAULT_ALPHAS

Command = Literal["estimate", "test", "pillow-quantiles", "simulate"]
OutputFormat = Literal["json", "csv"]


class CliConfig(BaseModel):
    """コマンドラインの設定. 優先順位はフラグ > 環境変数 (BLINDPAIR_) > 既定値

    Attributes:
        command (Command): サブコマンド
        input_path (Optional[Path]): 入力CSV (estimate, test)
        output_path (Optional[Path]): 出力先. None の場合 JSON は stdout, CSV は入力の隣
        seed (int): シード
        m (int): pillow の格子サイズ
        reps (int): pillow の反復回数
        alpha_list (List[float]): 報告する分位点の alpha
        alpha (Optional[float]): 棄却判定 (test) またはサイズ・検出力 (simulate) の有意水準
        grid_path (Optional[Path]): 評価点のCSV. None は自動
        format (OutputFormat): json | csv
        threads (int): ワーカー数
        cache_dir (Path): pillow キャッシュの保存先
        isotonic (bool): 推定値を単調化するか
        delimiter (str): 入力CSVの区切り文字
        scenario (Optional[str]): simulate のシナリオ名
        n (Optional[int]): simulate のペア数. None はシナリオの既定値
        study_reps (Optional[int]): simulate の反復回数. None はシナリオの既定値
        c (float): shrinking の係数
        delta (float): shrinking の指数
        x0 (float): clt の評価点
    """

    command: Command
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    seed: int = Field(default=0, ge=0)
    m: int = Field(default=1000, ge=2)
    reps: int = Field(default=100_000, ge=1)
    alpha_list: List[float] = Field(default_factory=lambda: list(DEFAULT_ALPHAS))
    alpha: Optional[float] = None
    grid_path: Optional[Path] = None
    format: OutputFormat = "json"
    threads: int = Field(default=1, ge=1)
    cache_dir: Path = Path.home() / ".cache" / "blindpair"
    isotonic: bool = False
    delimiter: str = ","
    scenario: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1)
    study_reps: Optional[int] = Field(default=None, ge=1)
    c: float = Field(default=1.0, gt=0)
    delta: float = Field(default=0.125, gt=0, le=0.25)
    x0: float = 0.5

    @field_validator("alpha_list")
    @classmethod
    def _check_alpha_list(cls, v: List[float]) -> List[float]:
        if len(v) == 0:
            raise ValueError("alpha list must not be empty")
        for alpha in v:
            if not 0.0 < alpha < 1.0:
                raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
        return v

    @field_validator("alpha")
    @classmethod
    def _check_alpha(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not 0.0 <= v < 1.0:
            raise ValueError(f"alpha must lie in [0, 1), got {v}")
        return v

    @model_validator(mode="after")
    def _check_required(self) -> "CliConfig":
        if self.command in ("estimate", "test") and self.input_path is None:
            raise ValueError(f"{self.command} requires an input file")
        if self.command == "simulate" and not self.scenario:
            raise ValueError("simulate requires a scenario name")
        # alpha = 0 は simulate のサイズ実験でのみ意味を持つ (棄却域が空)
        if self.command == "test" and self.alpha is not None and not 0.0 < self.alpha < 1.0:
            raise ValueError(f"test requires alpha in (0, 1), got {self.alpha}")
        return self

    @classmethod
    def from_args(cls, args: argparse.Namespace, env: Optional[Settings] = None) -> "CliConfig":
        """argparse の結果から作る. 指定のないフラグは env (既定は settings) の値を使う"""
        env = env or settings
        values = {k: v for k, v in vars(args).items() if v is not None and k != "log_level"}
        values.setdefault("seed", env.SEED)
        values.setdefault("cache_dir", env.CACHE_DIR)
        values.setdefault("threads", env.resolved_threads())
        return cls(**values)
