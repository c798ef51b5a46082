"""最小値・最大値の ECDF から周辺分布関数 G1 = min{F1, F2}, G2 = max{F1, F2} を推定する"""
from logging import getLogger
from typing import Literal, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from blindpair.domain.entities import (
    EvalGrid,
    HWeights,
    MarginalEstimate,
    UnorderedPairSample,
)
from blindpair.domain.errors import DomainError, OutsideDomain

from .ecdf import count_at_most

logger = getLogger(__name__)

# alpha_beta で丸め誤差とみなす負の判別式の大きさ
_DISCRIMINANT_ROUNDING = 1e-12
# h_weights, asymptotic_sd での sqrt(Δ) の下限
_ROOT_FLOOR = 1e-12


def _check_proportion(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")


def forward_minmax(f1: float, f2: float) -> Tuple[float, float]:
    """独立な X ~ F1, Y ~ F2 に対する (P(min <= x), P(max <= x))

    Args:
        f1 (float): F1(x)
        f2 (float): F2(x)

    Returns:
        Tuple[float, float]: (F(1), F(2)) = (f1 + f2 - f1 f2, f1 f2)
    """
    _check_proportion("f1", f1)
    _check_proportion("f2", f2)
    return f1 + f2 - f1 * f2, f1 * f2


def discriminant(s: float, t: float) -> float:
    """Δ(s, t) = (s + t)^2 - 4t. (s, t) = forward_minmax(F1, F2) なら (F1 - F2)^2"""
    return (s + t) ** 2 - 4.0 * t


def alpha_beta(s: float, t: float) -> Tuple[float, float]:
    """(s, t) = (F(1), F(2)) から (min{F1, F2}, max{F1, F2}) を復元する

    Raises:
        OutsideDomain: 判別式が負 (丸め誤差の範囲を除く)
    """
    delta = discriminant(s, t)
    if delta < -_DISCRIMINANT_ROUNDING:
        raise OutsideDomain(f"discriminant is negative at (s={s!r}, t={t!r}): {delta!r}")
    root = np.sqrt(max(delta, 0.0))
    alpha = min(max((s + t - root) / 2.0, 0.0), 1.0)
    beta = min(max((s + t + root) / 2.0, 0.0), 1.0)
    return float(alpha), float(beta)


def default_grid(s: UnorderedPairSample) -> EvalGrid:
    """ECDF が変化する点: 重複を除いた全 2n 個の値"""
    return EvalGrid.from_values(s.pooled_values())


def estimate_marginals(
    s: UnorderedPairSample, grid: Optional[EvalGrid] = None
) -> MarginalEstimate:
    """grid 上で G1n = α(F_n^(1), F_n^(2)), G2n = β(F_n^(1), F_n^(2)) を計算する

    判別式 Dn が負の点では Dn を 0 に切り詰め, G1n = G2n = (F_n^(1) + F_n^(2)) / 2 とする.
    Dn は件数の整数演算で求めるので, 切り詰めの判定に丸め誤差は入らない.

    Args:
        s (UnorderedPairSample): サンプル
        grid (Optional[EvalGrid]): 評価点. None の場合は default_grid(s)

    Returns:
        MarginalEstimate: 推定結果. discriminant には切り詰める前の Dn を入れる
    """
    if grid is None:
        grid = default_grid(s)
    n = s.n
    count_min = count_at_most(np.sort(s.u), grid.points).astype(np.int64)
    count_max = count_at_most(np.sort(s.v), grid.points).astype(np.int64)
    total = count_min + count_max

    # n^2 Dn = (n F_n^(1) + n F_n^(2))^2 - 4 n (n F_n^(2))
    scaled = total * total - 4 * n * count_max
    truncated = scaled < 0
    root = np.sqrt(np.where(truncated, 0, scaled).astype(np.float64))
    g1 = (total - root) / (2.0 * n)
    g2 = (total + root) / (2.0 * n)

    if truncated.any():
        logger.debug(f"discriminant truncated at {int(truncated.sum())} of {len(grid)} grid points")
    return MarginalEstimate(
        grid=grid,
        g1=g1,
        g2=g2,
        discriminant=scaled / float(n) ** 2,
        truncated=truncated,
    )


def h_weights(s: float, t: float) -> HWeights:
    """G1n, G2n の極限過程の重み h1∓, h2∓

    Raises:
        OutsideDomain: Δ(s, t) <= 0
    """
    delta = discriminant(s, t)
    if delta <= 0:
        raise OutsideDomain(f"h-weights need a positive discriminant, got {delta!r}")
    root = max(float(np.sqrt(delta)), _ROOT_FLOOR)
    return HWeights(
        h1_minus=1.0 - (s + t) / root,
        h2_minus=1.0 - (s + t - 2.0) / root,
        h1_plus=1.0 + (s + t) / root,
        h2_plus=1.0 + (s + t - 2.0) / root,
    )


def asymptotic_sd(s: float, t: float, which: Literal["lower", "upper"]) -> float:
    """(F(1), F(2)) = (s, t) となる点での sqrt(n)(G1n - G1) または sqrt(n)(G2n - G2) の極限標準偏差

    {V <= x} ⊆ {U <= x} より Cov(1{U <= x}, 1{V <= x}) = t(1 - s) を使う.

    Args:
        s (float): F(1)(x)
        t (float): F(2)(x)
        which (Literal["lower", "upper"]): "lower" は G1n, "upper" は G2n

    Raises:
        OutsideDomain: Δ(s, t) <= 0
    """
    weights = h_weights(s, t)
    if which == "lower":
        h1, h2 = weights.lower()
    elif which == "upper":
        h1, h2 = weights.upper()
    else:
        raise ValueError(f"Invalid branch: {which}")
    variance = 0.25 * (
        h1 * h1 * s * (1.0 - s) + h2 * h2 * t * (1.0 - t) + 2.0 * h1 * h2 * t * (1.0 - s)
    )
    return float(np.sqrt(max(variance, 0.0)))


def isotonize(values: ArrayLike) -> NDArray[np.float64]:
    """最小二乗の意味で最も近い非減少列 (pool-adjacent-violators)

    推定量 G1n, G2n は単調とは限らないので, 必要なら後処理として使う.
    """
    y = np.asarray(values, dtype=np.float64)
    if y.ndim != 1:
        raise ValueError("isotonize expects a 1-d sequence")
    if len(y) == 0:
        return y.copy()

    # ブロックごとの (平均, 長さ)
    means: list[float] = []
    widths: list[int] = []
    for value in y:
        means.append(float(value))
        widths.append(1)
        # "pool adjacent violators"
        while len(means) > 1 and means[-2] > means[-1]:
            width = widths[-2] + widths[-1]
            mean = (means[-2] * widths[-2] + means[-1] * widths[-1]) / width
            means.pop()
            widths.pop()
            means[-1] = mean
            widths[-1] = width
    return np.repeat(means, widths)


def separation_set(e: MarginalEstimate, m: float) -> list[int]:
    """g2 - g1 >= m となる grid の index"""
    if not 0.0 < m < 1.0:
        raise ValueError(f"m must lie in (0, 1), got {m!r}")
    return np.flatnonzero(e.gap >= m).tolist()


def estimate_to_isotonic(e: MarginalEstimate) -> MarginalEstimate:
    """g1, g2 をそれぞれ isotonize した MarginalEstimate

    g1 <= g2 を保つため, 最後に g1 = min(g1, g2) とする.
    """
    g1 = isotonize(e.g1)
    g2 = isotonize(e.g2)
    return MarginalEstimate(
        grid=e.grid,
        g1=np.minimum(g1, g2),
        g2=g2,
        discriminant=e.discriminant,
        truncated=e.truncated,
    )


def true_minmax(f1: Sequence[float], f2: Sequence[float]) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """(min{F1, F2}, max{F1, F2}) を点ごとに"""
    a = np.asarray(f1, dtype=np.float64)
    b = np.asarray(f2, dtype=np.float64)
    return np.minimum(a, b), np.maximum(a, b)


def crossing_point(e: MarginalEstimate, lo: float, hi: float) -> float:
    """区間 (lo, hi) で F1 と F2 が交わる点の推定

    g2 - g1 が最小の grid 点. 切り詰めで最小値 (0) をとる点が複数あるときはその中央値.
    """
    points = e.grid.points
    inside = np.flatnonzero((points > lo) & (points < hi))
    if len(inside) == 0:
        raise ValueError(f"no grid point inside ({lo!r}, {hi!r})")
    gap = e.gap[inside]
    return float(np.median(points[inside[gap == gap.min()]]))


def crossing_variants(
    e: MarginalEstimate, crossing: float
) -> Tuple[Tuple[NDArray[np.float64], NDArray[np.float64]], Tuple[NDArray[np.float64], NDArray[np.float64]]]:
    """F1 と F2 が 1 点で交わるときの, 周辺分布の組の 2 通りの推定

    min, max の分布からは {F1, F2} が交わるかどうかが決まらない.
    1 つ目は (g1, g2) そのもの, 2 つ目は crossing 以降で g1 と g2 を入れ替えたもの.
    どちらも点ごとの min, max は (g1, g2) に一致する.

    Args:
        e (MarginalEstimate): 推定結果
        crossing (float): 交点. x >= crossing の点で入れ替える

    Returns:
        ((g1, g2), (交差させた 1 本目, 交差させた 2 本目))
    """
    after = e.grid.points >= crossing
    crossed = (np.where(after, e.g2, e.g1), np.where(after, e.g1, e.g2))
    return (e.g1.copy(), e.g2.copy()), crossed
