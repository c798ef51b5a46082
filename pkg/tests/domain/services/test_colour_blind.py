import itertools

import numpy as np
import pytest

from blindpair.domain.entities import PillowConfig, PillowSample
from blindpair.domain.errors import BadRegion
from blindpair.domain.services import (
    ingest_pairs,
    monte_carlo_p_value,
    rns_eval,
    sup_statistic,
    sym_ecdf,
)


def _augmented_grid(sample):
    values = np.unique(sample.pooled_values())
    gap = np.diff(values).min() / 2 if len(values) > 1 else 0.5
    return np.unique(np.concatenate([values, values - gap]))


def _brute_force_sup(sample):
    grid = _augmented_grid(sample)
    return max(
        abs(rns_eval(sample, u, v)) for i, u in enumerate(grid) for v in grid[i:]
    )


def _three_term(x, y, grid):
    """ordered sample (x, y) から R_n(u, v) + R_n(v, u) - R_n(u, u) を grid 上の行列で"""
    n = len(x)
    below_x = (x[:, None] <= grid[None, :]).astype(float)
    below_y = (y[:, None] <= grid[None, :]).astype(float)
    joint = below_x.T @ below_y / n
    q = (below_x.mean(axis=0) + below_y.mean(axis=0)) / 2
    r = np.sqrt(n) * (joint - np.outer(q, q))
    return r + r.T - np.diag(r)[:, None]


class TestSymEcdf:
    def test_single_pair_corner(self):
        assert sym_ecdf(ingest_pairs([(1, 2)]), 1, 2) == 1.0

    def test_single_pair_below_max(self):
        assert sym_ecdf(ingest_pairs([(1, 2)]), 1, 1.5) == 0.0

    def test_three_pairs(self):
        sample = ingest_pairs([(1, 4), (2, 3), (2, 5)])
        assert sym_ecdf(sample, 2, 4) == pytest.approx(2 / 3)

    def test_three_pairs_every_order_assignment(self):
        pairs = [(1, 4), (2, 3), (2, 5)]
        for flips in itertools.product([False, True], repeat=len(pairs)):
            x = np.array([b if f else a for (a, b), f in zip(pairs, flips)], dtype=float)
            y = np.array([a if f else b for (a, b), f in zip(pairs, flips)], dtype=float)

            def joint(u, v):
                return np.mean((x <= u) & (y <= v))

            assert joint(2, 4) + joint(4, 2) - joint(2, 2) == pytest.approx(2 / 3)

    def test_bad_region(self):
        with pytest.raises(BadRegion):
            sym_ecdf(ingest_pairs([(1, 2)]), 2, 1)


class TestRnsEval:
    def test_pinned_above_data(self, random_sample):
        assert rns_eval(random_sample, 5.0, 5.0) == 0.0

    def test_pinned_below_data(self, random_sample):
        assert rns_eval(random_sample, -1.0, 0.5) == 0.0

    def test_hand_computation(self):
        assert rns_eval(ingest_pairs([(1, 4), (2, 3)]), 2, 3) == pytest.approx(0.0, abs=1e-15)

    def test_bad_region(self, random_sample):
        with pytest.raises(BadRegion):
            rns_eval(random_sample, 0.6, 0.5)

    def test_matches_three_term_symmetrization_for_every_order(self):
        rng = np.random.default_rng(99)
        for _ in range(200):
            n = int(rng.integers(1, 9))
            # 丸めた値で同値を作る
            values = np.round(rng.random((n, 2)), 1)
            sample = ingest_pairs(values.tolist())
            grid = _augmented_grid(sample)
            expected = np.array(
                [[rns_eval(sample, u, v) if u <= v else 0.0 for v in grid] for u in grid]
            )
            upper = np.triu(np.ones((len(grid), len(grid)), dtype=bool))
            for flips in itertools.product([False, True], repeat=n):
                flips = np.array(flips)
                x = np.where(flips, values[:, 1], values[:, 0])
                y = np.where(flips, values[:, 0], values[:, 1])
                actual = _three_term(x, y, grid)
                np.testing.assert_allclose(actual[upper], expected[upper], atol=1e-12)


class TestSupStatistic:
    def test_single_pair(self):
        assert sup_statistic(ingest_pairs([(1, 2)])) == pytest.approx(0.25)

    def test_identical_pairs(self):
        assert sup_statistic(ingest_pairs([(0.4, 0.4)] * 5)) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_matches_exhaustive_evaluation(self, seed):
        rng = np.random.default_rng(seed)
        values = np.round(rng.random((int(rng.integers(2, 15)), 2)), 1)
        sample = ingest_pairs(values.tolist())
        assert sup_statistic(sample) == pytest.approx(_brute_force_sup(sample), abs=1e-12)

    def test_rank_invariance(self, random_sample):
        transformed = random_sample.transform(lambda a: np.exp(3.0 * a) - 7.0)
        assert sup_statistic(transformed) == pytest.approx(sup_statistic(random_sample), abs=1e-12)

    def test_nonnegative(self, random_sample):
        assert sup_statistic(random_sample) >= 0.0


class TestMonteCarloPValue:
    @pytest.fixture
    def reference(self):
        config = PillowConfig(m=2, reps=4, seed=0)
        return PillowSample(sup_values=[0.1, 0.2, 0.3, 0.4], config=config)

    def test_zero_statistic(self, reference):
        assert monte_carlo_p_value(0.0, reference) == 1.0

    def test_statistic_above_all_replicates(self, reference):
        assert monte_carlo_p_value(5.0, reference) == pytest.approx(1 / 5)

    def test_ties_count_as_exceedances(self, reference):
        assert monte_carlo_p_value(0.3, reference) == pytest.approx(3 / 5)
