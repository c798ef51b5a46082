from .estimate_marginals import EstimateMarginalsUseCase
from .generate_pillow_sample import GeneratePillowSampleResult, GeneratePillowSampleUseCase
from .run_clt_check import RunCltCheckUseCase, run_clt_check
from .run_colour_blind_test import RunColourBlindTestUseCase, run_test
from .run_estimation_study import RunEstimationStudyUseCase, run_estimation_study
from .run_size_power_study import RunSizePowerStudyUseCase, run_size_power_study
from .shrinking_separation_study import (
    DEFAULT_LADDER,
    ShrinkingSeparationStudyUseCase,
    shrinking_separation_study,
)

__all__ = [
    "EstimateMarginalsUseCase",
    "GeneratePillowSampleResult",
    "GeneratePillowSampleUseCase",
    "RunColourBlindTestUseCase",
    "RunEstimationStudyUseCase",
    "RunCltCheckUseCase",
    "RunSizePowerStudyUseCase",
    "ShrinkingSeparationStudyUseCase",
    "DEFAULT_LADDER",
    "run_test",
    "run_estimation_study",
    "run_clt_check",
    "run_size_power_study",
    "shrinking_separation_study",
]
