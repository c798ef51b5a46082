"""シミュレーション用の [0, 1] 上の分布: CDF と逆変換サンプリング"""
from logging import getLogger
from typing import Tuple, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammaln

from blindpair.domain.entities import GeneratorSpec
from blindpair.domain.errors import NumericalNonconvergence

logger = getLogger(__name__)

MAX_ITERATIONS = 200
_EPS = 1e-15
_FPMIN = 1e-300
BISECTION_TOLERANCE = 1e-10


def _fix_tiny(values: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.where(np.abs(values) < _FPMIN, _FPMIN, values)


def _beta_continued_fraction(a: float, b: float, x: NDArray[np.float64]) -> NDArray[np.float64]:
    """不完全ベータ関数の連分数 (modified Lentz). x は配列で, 全要素が収束するまで回す"""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = np.ones_like(x)
    d = 1.0 / _fix_tiny(1.0 - qab * x / qap)
    h = d.copy()
    for m in range(1, MAX_ITERATIONS + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 / _fix_tiny(1.0 + aa * d)
        c = _fix_tiny(1.0 + aa / c)
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 / _fix_tiny(1.0 + aa * d)
        c = _fix_tiny(1.0 + aa / c)
        step = d * c
        h *= step
        if np.all(np.abs(step - 1.0) < _EPS):
            return h
    raise NumericalNonconvergence(
        f"incomplete beta continued fraction did not converge in {MAX_ITERATIONS} iterations (a={a}, b={b})"
    )


def regularized_incomplete_beta(
    x: Union[float, ArrayLike], a: float, b: float
) -> Union[float, NDArray[np.float64]]:
    """I_x(a, b) (Beta(a, b) の CDF)

    x < (a + 1) / (a + b + 2) では連分数を直接, それ以外は I_x(a, b) = 1 - I_{1-x}(b, a) を使う.

    Raises:
        NumericalNonconvergence: 連分数が MAX_ITERATIONS 回で収束しない
    """
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be strictly positive")
    xs = np.clip(np.asarray(x, dtype=np.float64), 0.0, 1.0)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)

    if a == 1.0 and b == 1.0:
        result = xs.copy()
    elif b == 1.0:
        result = xs**a
    elif a == 1.0:
        result = -np.expm1(b * np.log1p(-xs))
    else:
        result = np.where(xs >= 1.0, 1.0, 0.0)
        interior = (xs > 0.0) & (xs < 1.0)
        xi = xs[interior]
        log_front = (
            gammaln(a + b)
            - gammaln(a)
            - gammaln(b)
            + a * np.log(xi)
            + b * np.log1p(-xi)
        )
        front = np.exp(log_front)
        direct = xi < (a + 1.0) / (a + b + 2.0)
        values = np.empty_like(xi)
        if np.any(direct):
            values[direct] = front[direct] * _beta_continued_fraction(a, b, xi[direct]) / a
        if np.any(~direct):
            flipped = 1.0 - xi[~direct]
            values[~direct] = 1.0 - front[~direct] * _beta_continued_fraction(b, a, flipped) / b
        result[interior] = np.clip(values, 0.0, 1.0)

    if scalar:
        return float(result[0])
    return result


def true_cdf(g: GeneratorSpec, x: Union[float, ArrayLike]) -> Union[float, NDArray[np.float64]]:
    """GeneratorSpec の CDF"""
    if g.kind == "beta":
        return regularized_incomplete_beta(x, g.a, g.b)
    clamped = np.clip(np.asarray(x, dtype=np.float64), 0.0, 1.0)
    values = clamped if g.kind == "uniform" else clamped**g.k
    if values.ndim == 0:
        return float(values)
    return values


def inverse_cdf(g: GeneratorSpec, p: ArrayLike) -> NDArray[np.float64]:
    """一様乱数 p を g の分布に写す

    beta は true_cdf の二分法 (許容誤差 BISECTION_TOLERANCE) で逆関数を求める.
    """
    probs = np.asarray(p, dtype=np.float64)
    if g.kind == "uniform":
        return probs.copy()
    if g.kind == "power":
        return probs ** (1.0 / g.k)

    lo = np.zeros_like(probs)
    hi = np.ones_like(probs)
    while np.max(hi - lo, initial=0.0) > BISECTION_TOLERANCE:
        mid = 0.5 * (lo + hi)
        below = regularized_incomplete_beta(mid, g.a, g.b) < probs
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def sample_ordered_pairs(
    g1: GeneratorSpec, g2: GeneratorSpec, n: int, rng: np.random.Generator
) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """独立な X ~ g1, Y ~ g2 を n 組. 一様乱数は (X_1, Y_1, X_2, Y_2, ...) の順に使う"""
    uniforms = rng.random((n, 2))
    return inverse_cdf(g1, uniforms[:, 0]), inverse_cdf(g2, uniforms[:, 1])


def sample_unordered_pair(
    g1: GeneratorSpec, g2: GeneratorSpec, rng: np.random.Generator
) -> Tuple[float, float]:
    """1 組分の (min{X, Y}, max{X, Y})"""
    x, y = sample_ordered_pairs(g1, g2, 1, rng)
    return float(min(x[0], y[0])), float(max(x[0], y[0]))
