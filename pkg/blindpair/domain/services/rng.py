"""反復ごとに独立な乱数列を (seed, 反復番号) から導出し, 並列に実行する"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, TypeVar

import numpy as np

T = TypeVar("T")

_BLOCK_SIZE = 64


def derive_rng(seed: int, *parts: int) -> np.random.Generator:
    """SeedSequence([seed, *parts]) から作る Generator

    同じ (seed, parts) からは常に同じ乱数列が得られる. seed は 0 以上.
    """
    if seed < 0:
        raise ValueError(f"seed must be >= 0, got {seed}")
    return np.random.default_rng(np.random.SeedSequence([seed, *parts]))


def run_replicates(
    func: Callable[[int, np.random.Generator], T],
    seed: int,
    reps: int,
    threads: Optional[int] = None,
) -> List[T]:
    """func(r, derive_rng(seed, r)) を r = 0..reps-1 について実行し, r の順に返す

    結果は threads の値によらない.

    Args:
        func (Callable[[int, np.random.Generator], T]): 1 反復分の処理
        seed (int): シード
        reps (int): 反復回数
        threads (Optional[int]): ワーカー数. None または 1 なら逐次実行
    """

    def run_block(start: int) -> List[T]:
        stop = min(start + _BLOCK_SIZE, reps)
        return [func(r, derive_rng(seed, r)) for r in range(start, stop)]

    starts = range(0, reps, _BLOCK_SIZE)
    if threads is None or threads <= 1 or reps <= _BLOCK_SIZE:
        blocks = [run_block(start) for start in starts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            # map は投入順に結果を返す
            blocks = list(executor.map(run_block, starts))
    return [item for block in blocks for item in block]
