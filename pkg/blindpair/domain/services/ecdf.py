"""ペアの取り込みと経験分布関数"""
from logging import getLogger
from typing import Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike

from blindpair.domain.entities import Ecdf, UnorderedPairSample
from blindpair.domain.errors import BadValue, EmptySample

logger = getLogger(__name__)


def _first_bad_row(rows: Sequence) -> int:
    for idx, row in enumerate(rows):
        try:
            a, b = row
            if not (np.isfinite(float(a)) and np.isfinite(float(b))):
                return idx
        except (TypeError, ValueError):
            return idx
    return -1


def ingest_pairs(rows: Sequence[Tuple[float, float]]) -> UnorderedPairSample:
    """行 (a, b) を (min{a, b}, max{a, b}) として取り込む

    行の順序は保持し, 重複も除かない.

    Args:
        rows (Sequence[Tuple[float, float]]): 2 値の行

    Returns:
        UnorderedPairSample: 正規化したサンプル

    Raises:
        EmptySample: rows が空
        BadValue: 非有限値, または数値に変換できない値を含む行がある
    """
    if len(rows) == 0:
        raise EmptySample()
    try:
        arr = np.asarray(rows, dtype=np.float64)
    except (TypeError, ValueError):
        raise BadValue(_first_bad_row(rows))
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise BadValue(_first_bad_row(rows), "each row must hold exactly two values")
    bad = np.flatnonzero(~np.isfinite(arr).all(axis=1))
    if len(bad) > 0:
        raise BadValue(int(bad[0]))
    logger.debug(f"ingested {len(arr)} pairs")
    return UnorderedPairSample(u=arr.min(axis=1), v=arr.max(axis=1))


def ecdf_build(values: ArrayLike) -> Ecdf:
    """観測値 1 つあたり 1/len(values) の質量を持つ ECDF を作る"""
    arr = np.asarray(values, dtype=np.float64).ravel()
    if len(arr) == 0:
        raise EmptySample()
    if not np.all(np.isfinite(arr)):
        raise BadValue(int(np.flatnonzero(~np.isfinite(arr))[0]))
    support, counts = np.unique(arr, return_counts=True)
    cum_prop = np.cumsum(counts) / len(arr)
    return Ecdf(support=support, cum_prop=cum_prop)


def ecdf_eval(f: Ecdf, x: float) -> float:
    return f(x)


def min_max_ecdfs(s: UnorderedPairSample) -> Tuple[Ecdf, Ecdf]:
    """(F_n^(1), F_n^(2)): 各ペアの最小値と最大値の ECDF"""
    return ecdf_build(s.u), ecdf_build(s.v)


def pooled_ecdf(s: UnorderedPairSample) -> Ecdf:
    """全 2n 個の値の ECDF Q_n. (F_n^(1) + F_n^(2)) / 2 と一致する"""
    return ecdf_build(s.pooled_values())


def count_at_most(sorted_values: np.ndarray, x: ArrayLike) -> np.ndarray:
    """sorted_values のうち x 以下の個数 (整数)"""
    return np.searchsorted(sorted_values, x, side="right")
