"""順序の見えないペアに対する対称化経験過程 R_n^s と sup 統計量"""
from logging import getLogger

import numpy as np

from blindpair.domain.entities import PillowSample, UnorderedPairSample
from blindpair.domain.errors import BadRegion

from .ecdf import count_at_most

logger = getLogger(__name__)


def sym_ecdf(s: UnorderedPairSample, u: float, v: float) -> float:
    """(1/n) #{i : u_i <= u, v_i <= v}  (u <= v)

    u <= v では F_n(u, v) + F_n(v, u) - F_n(u, u) が各ペアの順序によらずこの値になる.

    Raises:
        BadRegion: u > v
    """
    if u > v:
        raise BadRegion(u, v)
    return float(np.count_nonzero((s.u <= u) & (s.v <= v)) / s.n)


def rns_eval(s: UnorderedPairSample, u: float, v: float) -> float:
    """R_n^s(u, v) = sqrt(n) [sym_ecdf(u, v) - 2 Q_n(u) Q_n(v) + Q_n(u)^2]  (u <= v)

    Q_n は全 2n 個の値の ECDF.

    Raises:
        BadRegion: u > v
    """
    if u > v:
        raise BadRegion(u, v)
    pooled = np.sort(s.pooled_values())
    q_u = count_at_most(pooled, u) / len(pooled)
    q_v = count_at_most(pooled, v) / len(pooled)
    return float(np.sqrt(s.n) * (sym_ecdf(s, u, v) - 2.0 * q_u * q_v + q_u * q_u))


def sup_statistic(s: UnorderedPairSample) -> float:
    """sup_{u <= v} |R_n^s(u, v)|

    R_n^s は階段関数なので, 重複を除いた全値 w_1 < ... < w_g の組 (w_j, w_k), j <= k と
    各 w_j の左極限点で評価すれば十分. w_j の左極限点 (w_j - 最小間隔の半分) での値は
    w_{j-1} での値 (j = 1 なら 0) と一致するため, 0 から始めて格子上の最大値を取る.
    2 次元の累積件数を行ごとに更新するので計算量は O(g^2 + n).
    """
    n = s.n
    sqrt_n = np.sqrt(n)
    pooled = s.pooled_values()
    values, counts = np.unique(pooled, return_counts=True)
    g = len(values)
    q = np.cumsum(counts) / len(pooled)

    rank_u = np.searchsorted(values, s.u)
    rank_v = np.searchsorted(values, s.v)
    order = np.argsort(rank_u, kind="stable")
    rank_u = rank_u[order]
    rank_v = rank_v[order]
    row_starts = np.searchsorted(rank_u, np.arange(g + 1))

    # hist[k]: rank_u <= j かつ rank_v == k のペア数
    hist = np.zeros(g, dtype=np.int64)
    # rank_u <= j かつ rank_v < j のペア数
    below = 0
    stat = 0.0
    for j in range(g):
        if j > 0:
            below += int(hist[j - 1])
        start, stop = row_starts[j], row_starts[j + 1]
        if stop > start:
            np.add.at(hist, rank_v[start:stop], 1)
        counts_row = below + np.cumsum(hist[j:])
        q_u = q[j]
        row = counts_row / n - 2.0 * q_u * q[j:] + q_u * q_u
        stat = max(stat, float(np.abs(row).max()))
    stat *= sqrt_n
    logger.debug(f"sup statistic over {g} distinct values: {stat:.6f}")
    return stat


def monte_carlo_p_value(statistic: float, reference: PillowSample) -> float:
    """(1 + #{反復 >= statistic}) / (reps + 1)"""
    return (1 + reference.count_at_least(statistic)) / (reference.config.reps + 1)
