import json
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray

from .sample_models import EvalGrid

SCHEMA_VERSION = 1


@dataclass(frozen=True, eq=False)
class MarginalEstimate:
    """
    MarginalEstimate entity

    grid の各点での G1n (= min{F1, F2} の推定), G2n (= max{F1, F2} の推定).

    :ivar grid: 評価点
    :vartype grid: EvalGrid
    :ivar g1: G1n の値
    :vartype g1: NDArray[np.float64]
    :ivar g2: G2n の値
    :vartype g2: NDArray[np.float64]
    :ivar discriminant: 切り詰める前の判別式 Dn
    :vartype discriminant: NDArray[np.float64]
    :ivar truncated: Dn < 0 のため 0 に切り詰めた点
    :vartype truncated: NDArray[np.bool_]
    """

    grid: EvalGrid
    g1: NDArray[np.float64]
    g2: NDArray[np.float64]
    discriminant: NDArray[np.float64]
    truncated: NDArray[np.bool_]

    def __post_init__(self):
        size = len(self.grid)
        for name in ("g1", "g2", "discriminant", "truncated"):
            dtype = np.bool_ if name == "truncated" else np.float64
            arr = np.array(getattr(self, name), dtype=dtype)
            if arr.shape != (size,):
                raise ValueError(f"{name} must have the grid length {size}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def gap(self) -> NDArray[np.float64]:
        return self.g2 - self.g1

    def to_records(self) -> list[dict[str, Any]]:
        return [
            dict(x=float(x), g1=float(a), g2=float(b), d_n=float(d), truncated=bool(t))
            for x, a, b, d, t in zip(
                self.grid.points, self.g1, self.g2, self.discriminant, self.truncated
            )
        ]

    def to_dict(self) -> dict[str, Any]:
        return dict(
            schema_version=SCHEMA_VERSION,
            kind="marginal_estimate",
            x=self.grid.points.tolist(),
            g1=self.g1.tolist(),
            g2=self.g2.tolist(),
            d_n=self.discriminant.tolist(),
            truncated=self.truncated.tolist(),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "MarginalEstimate":
        return cls(
            grid=EvalGrid(points=data["x"]),
            g1=data["g1"],
            g2=data["g2"],
            discriminant=data["d_n"],
            truncated=data["truncated"],
        )


@dataclass(frozen=True)
class HWeights:
    """HWeights entity.

    G1n, G2n の極限分布で F(1), F(2) の経験過程にかかる重み.
    h1_minus + h1_plus = 2, h2_minus + h2_plus = 2.

    Attributes:
        h1_minus (float): G1n 側, F(1) の重み
        h2_minus (float): G1n 側, F(2) の重み
        h1_plus (float): G2n 側, F(1) の重み
        h2_plus (float): G2n 側, F(2) の重み
    """

    h1_minus: float
    h2_minus: float
    h1_plus: float
    h2_plus: float

    def lower(self) -> tuple[float, float]:
        return self.h1_minus, self.h2_minus

    def upper(self) -> tuple[float, float]:
        return self.h1_plus, self.h2_plus

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "HWeights":
        return cls(**data)
