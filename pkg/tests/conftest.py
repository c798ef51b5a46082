from pathlib import Path

import numpy as np
import pytest

from blindpair.adapters import NpzPillowCacheRepository
from blindpair.domain.entities import EvalGrid, GeneratorSpec, PillowConfig, StudySpec
from blindpair.domain.services import ingest_pairs


@pytest.fixture
def three_pairs():
    return ingest_pairs([(0.2, 0.9), (0.4, 0.5), (0.1, 0.3)])


@pytest.fixture
def random_sample():
    rng = np.random.default_rng(20240601)
    return ingest_pairs(rng.random((40, 2)).tolist())


@pytest.fixture
def cache_repository(tmp_path: Path) -> NpzPillowCacheRepository:
    return NpzPillowCacheRepository(cache_dir=tmp_path / "cache")


@pytest.fixture
def small_pillow_config() -> PillowConfig:
    return PillowConfig(m=8, reps=50, seed=3)


@pytest.fixture
def uniform_square_spec() -> StudySpec:
    return StudySpec(
        gen1=GeneratorSpec.uniform(),
        gen2=GeneratorSpec.power(2.0),
        n=60,
        reps=5,
        seed=7,
        grid=EvalGrid(points=np.round(np.linspace(0.0, 1.0, 21), 12)),
        s_interval=(0.3, 0.7),
    )


@pytest.fixture
def pairs_csv(tmp_path: Path) -> Path:
    rng = np.random.default_rng(11)
    rows = rng.random((50, 2))
    path = tmp_path / "pairs.csv"
    path.write_text("first,second\n" + "\n".join(f"{float(a)!r},{float(b)!r}" for a, b in rows) + "\n")
    return path
