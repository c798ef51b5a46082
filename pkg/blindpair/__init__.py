from .framework.resolver import (
    ColourBlindTestClient,
    EstimationClient,
    PillowClient,
    SimulationClient,
)
from blindpair.domain.entities import (
    CltCheckResult,
    EvalGrid,
    GeneratorSpec,
    MarginalEstimate,
    PillowConfig,
    PillowSample,
    QuantileTable,
    ShrinkingSeparationResult,
    SizePowerResult,
    StudyResult,
    StudySpec,
    TestReport,
    UnorderedPairSample,
)

__all__ = [
    "UnorderedPairSample",
    "EvalGrid",
    "MarginalEstimate",
    "TestReport",
    "PillowConfig",
    "PillowSample",
    "QuantileTable",
    "GeneratorSpec",
    "StudySpec",
    "StudyResult",
    "CltCheckResult",
    "SizePowerResult",
    "ShrinkingSeparationResult",
    "EstimationClient",
    "ColourBlindTestClient",
    "PillowClient",
    "SimulationClient",
]
