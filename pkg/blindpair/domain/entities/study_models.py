import json
import math
from dataclasses import asdict, dataclass, field
from typing import List, Literal, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from .estimate_models import SCHEMA_VERSION
from .sample_models import EvalGrid

GeneratorKind = Literal["uniform", "power", "beta"]


def _finite_or_none(value: float) -> Optional[float]:
    """JSON に出せない inf, NaN は None (null) にする"""
    return float(value) if math.isfinite(value) else None


@dataclass(frozen=True)
class GeneratorSpec:
    """GeneratorSpec entity.

    [0, 1] 上の分布. power(k) の CDF は x^k, beta(a, b) の CDF は I_x(a, b).

    Attributes:
        kind (GeneratorKind): "uniform" | "power" | "beta"
        k (float): power の指数
        a (float): beta の第1パラメータ
        b (float): beta の第2パラメータ
    """

    kind: GeneratorKind = "uniform"
    k: float = 1.0
    a: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if self.kind not in ("uniform", "power", "beta"):
            raise ValueError(f"Invalid generator kind: {self.kind}")
        if self.k <= 0 or self.a <= 0 or self.b <= 0:
            raise ValueError("generator parameters must be strictly positive")

    @classmethod
    def uniform(cls) -> "GeneratorSpec":
        return cls(kind="uniform")

    @classmethod
    def power(cls, k: float) -> "GeneratorSpec":
        return cls(kind="power", k=k)

    @classmethod
    def beta(cls, a: float, b: float) -> "GeneratorSpec":
        return cls(kind="beta", a=a, b=b)

    @property
    def label(self) -> str:
        if self.kind == "power":
            return f"power({self.k:g})"
        if self.kind == "beta":
            return f"beta({self.a:g},{self.b:g})"
        return "uniform"

    def to_dict(self) -> dict:
        if self.kind == "power":
            return dict(kind=self.kind, k=self.k)
        if self.kind == "beta":
            return dict(kind=self.kind, a=self.a, b=self.b)
        return dict(kind=self.kind)

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorSpec":
        return cls(**data)


@dataclass(frozen=True)
class StudySpec:
    """StudySpec entity.

    Attributes:
        gen1 (GeneratorSpec): X の分布 (F1)
        gen2 (GeneratorSpec): Y の分布 (F2)
        n (int): 1回あたりのペア数
        reps (int): 反復回数
        seed (int): シード (>= 0)
        grid (EvalGrid): 推定量を評価する点
        s_interval (Optional[Tuple[float, float]]): sup 誤差を測る区間 S. None なら grid 全体
        keep_curves (bool): 反復ごとの曲線を結果に残すか
    """

    gen1: GeneratorSpec
    gen2: GeneratorSpec
    n: int
    reps: int
    seed: int
    grid: EvalGrid
    s_interval: Optional[Tuple[float, float]] = None
    keep_curves: bool = True

    def __post_init__(self):
        if self.n < 1 or self.reps < 1:
            raise ValueError("n and reps must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be >= 0")
        if self.s_interval is not None:
            lo, hi = self.s_interval
            if not lo < hi:
                raise ValueError(f"s_interval must satisfy lo < hi, got {self.s_interval}")

    def s_mask(self) -> NDArray[np.bool_]:
        """grid のうち S に入る点"""
        points = self.grid.points
        if self.s_interval is None:
            return np.ones(len(points), dtype=bool)
        lo, hi = self.s_interval
        return (points >= lo) & (points <= hi)

    def to_dict(self) -> dict:
        return dict(
            gen1=self.gen1.to_dict(),
            gen2=self.gen2.to_dict(),
            n=self.n,
            reps=self.reps,
            seed=self.seed,
            grid_size=len(self.grid),
            s_interval=list(self.s_interval) if self.s_interval else None,
        )


@dataclass(frozen=True, eq=False)
class StudyCurves:
    """反復ごとの曲線 (shape: reps x grid)

    g1, g2, truncated が推定量, それ以外は参照用の曲線.
    f1n, f2n は順序が観測できる場合の経験分布関数で, 実データでは計算できない.
    """

    g1: NDArray[np.float64]
    g2: NDArray[np.float64]
    truncated: NDArray[np.bool_]
    f1n: NDArray[np.float64]
    f2n: NDArray[np.float64]
    f_min_n: NDArray[np.float64]
    f_max_n: NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class StudyResult:
    """
    StudyResult entity

    :ivar spec: 実行した設定
    :ivar sup_error_g1: 反復ごとの sup_S |G1n - G1|
    :ivar sup_error_g2: 反復ごとの sup_S |G2n - G2|
    :ivar oracle_sup_error_f1: 反復ごとの sup_S |F1n - F1| (順序が見える場合の基準)
    :ivar oracle_sup_error_f2: 反復ごとの sup_S |F2n - F2|
    :ivar mean_g1: grid 上の G1n の平均
    :ivar mean_g2: grid 上の G2n の平均
    :ivar truncation_freq: grid の各点で切り詰めが起きた割合
    :ivar g1_true: min{F1, F2}
    :ivar g2_true: max{F1, F2}
    :ivar curves: 反復ごとの曲線 (keep_curves=False のときは None)
    """

    spec: StudySpec
    sup_error_g1: NDArray[np.float64]
    sup_error_g2: NDArray[np.float64]
    oracle_sup_error_f1: NDArray[np.float64]
    oracle_sup_error_f2: NDArray[np.float64]
    mean_g1: NDArray[np.float64]
    mean_g2: NDArray[np.float64]
    truncation_freq: NDArray[np.float64]
    g1_true: NDArray[np.float64]
    g2_true: NDArray[np.float64]
    curves: Optional[StudyCurves] = None

    def median_sup_error(self) -> Tuple[float, float]:
        return float(np.median(self.sup_error_g1)), float(np.median(self.sup_error_g2))

    def to_dict(self) -> dict:
        med1, med2 = self.median_sup_error()
        return dict(
            schema_version=SCHEMA_VERSION,
            kind="study_result",
            spec=self.spec.to_dict(),
            sup_error_g1=self.sup_error_g1.tolist(),
            sup_error_g2=self.sup_error_g2.tolist(),
            oracle_sup_error_f1=self.oracle_sup_error_f1.tolist(),
            oracle_sup_error_f2=self.oracle_sup_error_f2.tolist(),
            median_sup_error_g1=med1,
            median_sup_error_g2=med2,
            x=self.spec.grid.points.tolist(),
            mean_g1=self.mean_g1.tolist(),
            mean_g2=self.mean_g2.tolist(),
            truncation_freq=self.truncation_freq.tolist(),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class CltCheckResult:
    """CltCheckResult entity.

    Attributes:
        x0 (float): 評価点
        n (int): ペア数
        reps (int): 反復回数
        var_lower (float): sqrt(n)(G1n(x0) - G1(x0)) の標本分散
        var_upper (float): sqrt(n)(G2n(x0) - G2(x0)) の標本分散
        asymptotic_var_lower (float): asymptotic_sd(lower)^2
        asymptotic_var_upper (float): asymptotic_sd(upper)^2
    """

    x0: float
    n: int
    reps: int
    var_lower: float
    var_upper: float
    asymptotic_var_lower: float
    asymptotic_var_upper: float

    def as_tuple(self) -> Tuple[float, float]:
        return self.var_lower, self.var_upper

    def to_dict(self) -> dict:
        data = {k: _finite_or_none(v) if isinstance(v, float) else v for k, v in asdict(self).items()}
        return dict(schema_version=SCHEMA_VERSION, kind="clt_check", **data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, allow_nan=False)


@dataclass(frozen=True, eq=False)
class SizePowerResult:
    """SizePowerResult entity.

    Attributes:
        spec (StudySpec): 実行した設定
        alpha (float): 有意水準
        threshold (float): pillow の上側 100(1-alpha)% 分位点
        statistics (NDArray[np.float64]): 反復ごとの sup 統計量
        rejections (int): statistic > threshold となった回数
    """

    spec: StudySpec
    alpha: float
    threshold: float
    statistics: NDArray[np.float64]
    rejections: int

    @property
    def rejection_rate(self) -> float:
        return self.rejections / self.spec.reps

    def to_dict(self) -> dict:
        return dict(
            schema_version=SCHEMA_VERSION,
            kind="size_power",
            spec=self.spec.to_dict(),
            alpha=self.alpha,
            threshold=_finite_or_none(self.threshold),
            rejections=self.rejections,
            rejection_rate=self.rejection_rate,
            statistics=self.statistics.tolist(),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, allow_nan=False)


@dataclass(frozen=True)
class ShrinkingSeparationRow:
    """ShrinkingSeparationRow entity.

    Attributes:
        n (int): ペア数
        gap (float): c * n^-(1/4 - delta). F2 = x^(1 + gap)
        threshold (float): 縮小する分離領域の閾値 (最大の分離幅の半分)
        region_size (int): 縮小する分離領域に入る grid 点の数
        median_sup_error_g1 (float): 領域上の sup |G1n - G1| の中央値
        median_sup_error_g2 (float): 領域上の sup |G2n - G2| の中央値
        truncation_freq (float): 領域上で切り詰めが起きた割合
    """

    n: int
    gap: float
    threshold: float
    region_size: int
    median_sup_error_g1: float
    median_sup_error_g2: float
    truncation_freq: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ShrinkingSeparationResult:
    c: float
    delta: float
    rows: List[ShrinkingSeparationRow] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(
            schema_version=SCHEMA_VERSION,
            kind="shrinking_separation",
            c=self.c,
            delta=self.delta,
            rows=[row.to_dict() for row in self.rows],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
