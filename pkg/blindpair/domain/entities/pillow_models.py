import json
from dataclasses import asdict, dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from .estimate_models import SCHEMA_VERSION

DEFAULT_ALPHAS: Tuple[float, ...] = (0.1, 0.05, 0.01)

# m ごとの既知の上側分位点 (alpha = 0.1, 0.05, 0.01)
REFERENCE_QUANTILES: Dict[int, Tuple[float, float, float]] = {
    200: (0.8592, 0.9367, 1.0489),
    300: (0.8662, 0.9390, 1.0277),
    1000: (0.8868, 0.9533, 1.0804),
}


@dataclass(frozen=True)
class PillowConfig:
    """PillowConfig entity.

    Attributes:
        m (int): 格子のサイズ (m x m), m >= 2
        reps (int): モンテカルロの反復回数, reps >= 1
        seed (int): 乱数のシード (>= 0)
    """

    m: int = 1000
    reps: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if self.reps < 1:
            raise ValueError(f"reps must be >= 1, got {self.reps}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")

    def cache_key(self) -> str:
        return f"pillow_m{self.m}_r{self.reps}_s{self.seed}"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "PillowConfig":
        return cls(**data)


@dataclass(frozen=True, eq=False)
class PillowSample:
    """
    PillowSample entity

    :ivar sup_values: 対称化した Brownian pillow の sup の標本 (昇順)
    :vartype sup_values: NDArray[np.float64]
    :ivar config: 生成に使った設定
    :vartype config: PillowConfig
    """

    sup_values: NDArray[np.float64]
    config: PillowConfig

    def __post_init__(self):
        values = np.array(self.sup_values, dtype=np.float64)
        if values.shape != (self.config.reps,):
            raise ValueError(
                f"expected {self.config.reps} replicates, got {values.shape}"
            )
        if np.any(np.diff(values) < 0):
            raise ValueError("sup_values must be sorted ascending")
        if np.any(values < 0):
            raise ValueError("sup_values must be nonnegative")
        values.setflags(write=False)
        object.__setattr__(self, "sup_values", values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PillowSample):
            return NotImplemented
        return self.config == other.config and np.array_equal(
            self.sup_values, other.sup_values
        )

    def __hash__(self) -> int:
        return hash((self.config, self.sup_values.tobytes()))

    def count_at_least(self, statistic: float) -> int:
        """statistic 以上の反復の数"""
        return int(len(self.sup_values) - np.searchsorted(self.sup_values, statistic, side="left"))


@dataclass(frozen=True)
class QuantileTable:
    """QuantileTable entity.

    Attributes:
        rows (Dict[float, float]): alpha -> 上側 100(1-alpha)% 分位点
        config (Optional[PillowConfig]): 元になった PillowSample の設定
    """

    rows: Dict[float, float]
    config: Optional[PillowConfig] = None
    reference: Optional[Dict[float, float]] = field(default=None)

    def __post_init__(self):
        ordered = sorted(self.rows.items())
        values = [q for _, q in ordered]
        if any(b > a for a, b in zip(values, values[1:])):
            raise ValueError("quantiles must be nonincreasing in alpha")

    def to_dict(self) -> dict:
        ret = dict(
            schema_version=SCHEMA_VERSION,
            kind="quantile_table",
            rows={repr(a): q for a, q in sorted(self.rows.items(), reverse=True)},
        )
        if self.config is not None:
            ret["config"] = self.config.to_dict()
        if self.reference is not None:
            ret["reference"] = {
                repr(a): q for a, q in sorted(self.reference.items(), reverse=True)
            }
        return ret

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        header = f"{'alpha':>8}  {'quantile':>10}"
        if self.reference is not None:
            header += f"  {'reference':>10}"
        lines = [header]
        for alpha, q in sorted(self.rows.items(), reverse=True):
            line = f"{alpha:>8g}  {q:>10.4f}"
            if self.reference is not None and alpha in self.reference:
                line += f"  {self.reference[alpha]:>10.4f}"
            lines.append(line)
        return "\n".join(lines)
