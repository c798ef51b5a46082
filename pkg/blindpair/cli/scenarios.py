"""simulate サブコマンドのシナリオ"""
from dataclasses import dataclass
from typing import Dict, Literal, Optional, Tuple

import numpy as np

from blindpair.domain.entities import EvalGrid, GeneratorSpec, StudySpec

StudyKind = Literal["estimation", "size_power", "shrinking", "clt"]

# grid を指定しないときの評価点の数 ([0, 1] の等間隔)
DEFAULT_GRID_SIZE = 201


class UnknownScenario(KeyError):
    pass


@dataclass(frozen=True)
class Scenario:
    """
    Attributes:
        name (str): シナリオ名
        kind (StudyKind): 実行するシミュレーションの種類
        gen1 (GeneratorSpec): F1
        gen2 (GeneratorSpec): F2
        n (int): 既定のペア数
        reps (int): 既定の反復回数
        s_interval (Optional[Tuple[float, float]]): 既定の S
        description (str): --help に出す説明
    """

    name: str
    kind: StudyKind
    gen1: GeneratorSpec
    gen2: GeneratorSpec
    n: int
    reps: int
    s_interval: Optional[Tuple[float, float]] = None
    description: str = ""

    def study_spec(
        self,
        seed: int,
        n: Optional[int] = None,
        reps: Optional[int] = None,
        grid: Optional[EvalGrid] = None,
    ) -> StudySpec:
        return StudySpec(
            gen1=self.gen1,
            gen2=self.gen2,
            n=n or self.n,
            reps=reps or self.reps,
            seed=seed,
            grid=grid or default_study_grid(),
            s_interval=self.s_interval,
        )


def default_study_grid() -> EvalGrid:
    # 0.3, 0.7 などの端点が S の境界と一致するように丸める
    return EvalGrid(points=np.round(np.linspace(0.0, 1.0, DEFAULT_GRID_SIZE), 12))


SCENARIOS: Dict[str, Scenario] = {
    s.name: s
    for s in (
        Scenario(
            name="uniform-square",
            kind="estimation",
            gen1=GeneratorSpec.uniform(),
            gen2=GeneratorSpec.power(2.0),
            n=200,
            reps=100,
            s_interval=(0.3, 0.7),
            description="F1 = x vs F2 = x^2, sup error on [0.3, 0.7]",
        ),
        Scenario(
            name="beta-beta",
            kind="estimation",
            gen1=GeneratorSpec.beta(4.0, 4.0),
            gen2=GeneratorSpec.beta(0.25, 0.25),
            n=2000,
            reps=100,
            description="Beta(4,4) vs Beta(0.25,0.25), marginals cross at 0.5",
        ),
        Scenario(
            name="h0-uniform",
            kind="size_power",
            gen1=GeneratorSpec.uniform(),
            gen2=GeneratorSpec.uniform(),
            n=500,
            reps=500,
            description="rejection rate of the test under F1 = F2 (size)",
        ),
        Scenario(
            name="power-alternative",
            kind="size_power",
            gen1=GeneratorSpec.uniform(),
            gen2=GeneratorSpec.power(2.0),
            n=20000,
            reps=200,
            description="rejection rate of the test for x vs x^2 (power)",
        ),
        Scenario(
            name="shrinking",
            kind="shrinking",
            gen1=GeneratorSpec.uniform(),
            gen2=GeneratorSpec.uniform(),
            n=250,
            reps=100,
            description="x vs x^(1 + c n^-(1/4 - delta)) over a ladder of n",
        ),
        Scenario(
            name="clt",
            kind="clt",
            gen1=GeneratorSpec.uniform(),
            gen2=GeneratorSpec.power(2.0),
            n=2000,
            reps=5000,
            description="variance of sqrt(n)(G_n - G) at x0 against the asymptotic variance",
        ),
    )
}


def get_scenario(name: str) -> Scenario:
    try:
        return SCENARIOS[name]
    except KeyError:
        raise UnknownScenario(name) from None
