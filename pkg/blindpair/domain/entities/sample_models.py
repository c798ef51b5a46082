from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from blindpair.domain.errors import EmptySample


def _frozen(values: ArrayLike) -> NDArray[np.float64]:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class UnorderedPairSample:
    """
    UnorderedPairSample entity

    各ペアの順序は観測できないため (min, max) の形で保持する.

    :ivar u: 各ペアの小さい方の値 (U_i)
    :vartype u: NDArray[np.float64]
    :ivar v: 各ペアの大きい方の値 (V_i), u[i] <= v[i]
    :vartype v: NDArray[np.float64]
    """

    u: NDArray[np.float64]
    v: NDArray[np.float64]

    def __post_init__(self):
        u = _frozen(self.u)
        v = _frozen(self.v)
        if u.ndim != 1 or u.shape != v.shape:
            raise ValueError("u and v must be 1-d arrays of equal length")
        if len(u) == 0:
            raise EmptySample()
        if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
            raise ValueError("values must be finite")
        if np.any(u > v):
            raise ValueError("pairs must satisfy u <= v")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def pairs(self) -> List[Tuple[float, float]]:
        return [(float(a), float(b)) for a, b in zip(self.u, self.v)]

    def pooled_values(self) -> NDArray[np.float64]:
        """全 2n 個の値 (u と v を連結したもの)"""
        return np.concatenate([self.u, self.v])

    def transform(self, func) -> "UnorderedPairSample":
        """狭義単調増加な変換を全ての値に適用する"""
        return UnorderedPairSample(u=func(self.u), v=func(self.v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnorderedPairSample):
            return NotImplemented
        return np.array_equal(self.u, other.u) and np.array_equal(self.v, other.v)

    def __hash__(self) -> int:
        return hash((self.u.tobytes(), self.v.tobytes()))

    def to_dict(self) -> dict:
        return dict(pairs=[list(p) for p in self.pairs], n=self.n)

    @classmethod
    def from_dict(cls, data: dict) -> "UnorderedPairSample":
        pairs = np.asarray(data["pairs"], dtype=np.float64).reshape(-1, 2)
        return cls(u=pairs[:, 0], v=pairs[:, 1])


@dataclass(frozen=True, eq=False)
class Ecdf:
    """
    Ecdf entity

    右連続な階段関数. 同じ値はまとめて一つのジャンプとして保持する.

    :ivar support: 重複のない昇順の観測値
    :vartype support: NDArray[np.float64]
    :ivar cum_prop: support[j] 以下の観測値の割合 (狭義単調増加, 末尾は 1)
    :vartype cum_prop: NDArray[np.float64]
    """

    support: NDArray[np.float64]
    cum_prop: NDArray[np.float64]

    def __post_init__(self):
        support = _frozen(self.support)
        cum_prop = _frozen(self.cum_prop)
        if len(support) == 0:
            raise EmptySample()
        if support.shape != cum_prop.shape:
            raise ValueError("support and cum_prop must have equal length")
        if np.any(np.diff(support) <= 0) or np.any(np.diff(cum_prop) <= 0):
            raise ValueError("support and cum_prop must be strictly increasing")
        if cum_prop[-1] != 1.0 or cum_prop[0] <= 0.0:
            raise ValueError("cum_prop must lie in (0, 1] and end at 1")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "cum_prop", cum_prop)
        object.__setattr__(self, "_steps", np.concatenate([[0.0], cum_prop]))

    def __call__(
        self, x: Union[float, ArrayLike]
    ) -> Union[float, NDArray[np.float64]]:
        # support[j] <= x となる最大の j の cum_prop. x < support[0] では 0
        idx = np.searchsorted(self.support, x, side="right")
        values = self._steps[idx]
        if np.ndim(values) == 0:
            return float(values)
        return values

    def to_dict(self) -> dict:
        return dict(support=self.support.tolist(), cum_prop=self.cum_prop.tolist())

    @classmethod
    def from_dict(cls, data: dict) -> "Ecdf":
        return cls(support=data["support"], cum_prop=data["cum_prop"])


@dataclass(frozen=True, eq=False)
class EvalGrid:
    """
    EvalGrid entity

    :ivar points: 評価点 (空でない, 狭義単調増加)
    :vartype points: NDArray[np.float64]
    """

    points: NDArray[np.float64]

    def __post_init__(self):
        points = _frozen(self.points)
        if points.ndim != 1 or len(points) == 0:
            raise EmptySample("grid must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(points)):
            raise ValueError("grid points must be finite")
        if np.any(np.diff(points) <= 0):
            raise ValueError("grid points must be strictly increasing")
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def from_values(cls, values: ArrayLike) -> "EvalGrid":
        """任意の値の並びから、重複を除いて昇順にした grid を作る"""
        return cls(points=np.unique(np.asarray(values, dtype=np.float64)))

    def to_dict(self) -> dict:
        return dict(points=self.points.tolist())

    @classmethod
    def from_dict(cls, data: dict) -> "EvalGrid":
        return cls(points=data["points"])
