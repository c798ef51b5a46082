from .estimate_models import SCHEMA_VERSION, HWeights, MarginalEstimate
from .pillow_models import (
    DEFAULT_ALPHAS,
    REFERENCE_QUANTILES,
    PillowConfig,
    PillowSample,
    QuantileTable,
)
from .sample_models import Ecdf, EvalGrid, UnorderedPairSample
from .study_models import (
    CltCheckResult,
    GeneratorSpec,
    ShrinkingSeparationResult,
    ShrinkingSeparationRow,
    SizePowerResult,
    StudyCurves,
    StudyResult,
    StudySpec,
)
from .test_models import TestReport

__all__ = [
    "SCHEMA_VERSION",
    "UnorderedPairSample",
    "Ecdf",
    "EvalGrid",
    "MarginalEstimate",
    "HWeights",
    "TestReport",
    "DEFAULT_ALPHAS",
    "REFERENCE_QUANTILES",
    "PillowConfig",
    "PillowSample",
    "QuantileTable",
    "GeneratorSpec",
    "StudySpec",
    "StudyCurves",
    "StudyResult",
    "CltCheckResult",
    "SizePowerResult",
    "ShrinkingSeparationRow",
    "ShrinkingSeparationResult",
]
