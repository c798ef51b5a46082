"""対称化した Brownian pillow の sup のモンテカルロ近似"""
import math
from logging import getLogger
from typing import Optional, Protocol, Sequence

import numpy as np
from numpy.typing import NDArray

from blindpair.domain.entities import PillowConfig, PillowSample, QuantileTable
from blindpair.domain.errors import EmptySample

from .rng import run_replicates

logger = getLogger(__name__)


class NormalStream(Protocol):
    def standard_normal(self, size: tuple[int, int]) -> NDArray[np.float64]: ...


def pillow_field(m: int, rng: NormalStream) -> NDArray[np.float64]:
    """m x m 格子上の pinned field ζ

    ξ_ij ~ N(0, 1/m^2) を行優先で生成し, η_kl = Σ_{i<=k, j<=l} ξ_ij,
    ζ_kl = η_kl - (l/m) η_km - (k/m) η_ml + (k/m)(l/m) η_mm とする.
    最終行と最終列は 0 になる.

    Args:
        m (int): 格子サイズ (>= 2)
        rng (NormalStream): standard_normal を持つ乱数源

    Returns:
        NDArray[np.float64]: ζ (index 0 が k = 1 に対応)
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    eta = np.asarray(rng.standard_normal((m, m)), dtype=np.float64) / m
    np.cumsum(eta, axis=0, out=eta)
    np.cumsum(eta, axis=1, out=eta)

    frac = np.arange(1, m + 1, dtype=np.float64) / m
    last_col = eta[:, -1].copy()
    last_row = eta[-1, :].copy()
    corner = eta[-1, -1]

    zeta = eta
    zeta -= np.outer(last_col, frac)
    zeta -= np.outer(frac, last_row)
    zeta += corner * np.outer(frac, frac)
    return zeta


def symmetrize(zeta: NDArray[np.float64]) -> NDArray[np.float64]:
    """ζ^s_kl = ζ_kl + ζ_lk - ζ_kk. k <= l の上三角だけが意味を持つ"""
    return zeta + zeta.T - np.diag(zeta)[:, None]


def pillow_sup_once(m: int, rng: NormalStream) -> float:
    """max_{1 <= k <= l <= m} |ζ^s_kl| を 1 回分"""
    sym = symmetrize(pillow_field(m, rng))
    return float(np.abs(np.triu(sym)).max())


def generate(cfg: PillowConfig, threads: Optional[int] = None) -> PillowSample:
    """cfg.reps 回の pillow_sup_once を昇順に並べた PillowSample

    反復 r は derive_rng(cfg.seed, r) を使うので, 結果は threads によらない.
    """
    logger.debug(f"generating pillow sample m={cfg.m} reps={cfg.reps} seed={cfg.seed}")
    values = run_replicates(
        lambda r, rng: pillow_sup_once(cfg.m, rng),
        seed=cfg.seed,
        reps=cfg.reps,
        threads=threads,
    )
    return PillowSample(sup_values=np.sort(np.asarray(values)), config=cfg)


def quantile_index(alpha: float, reps: int) -> int:
    """上側 100(1-alpha)% 分位点に使う順序統計量の番号 ceil((1 - alpha) reps) (1始まり)"""
    # (1 - 0.05) * 100 = 95.00000000000001 のような丸めを落とす
    k = math.ceil(round((1.0 - alpha) * reps, 9))
    return min(max(k, 1), reps)


def quantiles(p: PillowSample, alphas: Sequence[float]) -> QuantileTable:
    """sup_values の経験上側分位点

    Raises:
        EmptySample: p が空
    """
    if len(p.sup_values) == 0:
        raise EmptySample("pillow sample is empty")
    rows = {}
    for alpha in alphas:
        if not 0.0 < alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
        rows[float(alpha)] = float(p.sup_values[quantile_index(alpha, len(p.sup_values)) - 1])
    return QuantileTable(rows=rows, config=p.config)
