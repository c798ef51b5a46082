from dataclasses import asdict
from logging import getLogger

import numpy as np
import pandas as pd

from blindpair.domain.entities import (
    CltCheckResult,
    MarginalEstimate,
    QuantileTable,
    ShrinkingSeparationResult,
    SizePowerResult,
    StudyResult,
)
from blindpair.domain.repositories import IResultWriterRepository

FLOAT_FORMAT = "%.17g"


class PandasResultWriterRepository(IResultWriterRepository):
    def __init__(self):
        self._logger = getLogger(__name__)

    def write_estimate(self, estimate: MarginalEstimate, path: str) -> str:
        frame = pd.DataFrame(
            {
                "x": estimate.grid.points,
                "g1": estimate.g1,
                "g2": estimate.g2,
                "d_n": estimate.discriminant,
                "truncated": estimate.truncated,
            }
        )
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        self._logger.debug(f"wrote {len(frame)} rows to {path}")
        return path

    def write_study_curves(self, result: StudyResult, path: str) -> str:
        if result.curves is None:
            raise ValueError("study was run without keep_curves")
        curves = result.curves
        reps, size = curves.g1.shape
        points = result.spec.grid.points
        frame = pd.DataFrame(
            {
                "rep": np.repeat(np.arange(reps), size),
                "x": np.tile(points, reps),
                "g1": curves.g1.ravel(),
                "g2": curves.g2.ravel(),
                "truncated": curves.truncated.ravel(),
                "f1n": curves.f1n.ravel(),
                "f2n": curves.f2n.ravel(),
                "f_min_n": curves.f_min_n.ravel(),
                "f_max_n": curves.f_max_n.ravel(),
                "g1_true": np.tile(result.g1_true, reps),
                "g2_true": np.tile(result.g2_true, reps),
            }
        )
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        self._logger.debug(f"wrote {len(frame)} rows to {path}")
        return path

    def write_shrinking(self, result: ShrinkingSeparationResult, path: str) -> str:
        frame = pd.DataFrame([row.to_dict() for row in result.rows])
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        return path

    def write_quantile_table(self, table: QuantileTable, path: str) -> str:
        alphas = sorted(table.rows, reverse=True)
        columns = {"alpha": alphas, "quantile": [table.rows[a] for a in alphas]}
        if table.reference is not None:
            columns["reference"] = [table.reference.get(a, np.nan) for a in alphas]
        pd.DataFrame(columns).to_csv(path, index=False, float_format=FLOAT_FORMAT)
        return path

    def write_size_power(self, result: SizePowerResult, path: str) -> str:
        frame = pd.DataFrame(
            {
                "rep": np.arange(len(result.statistics)),
                "statistic": result.statistics,
                "rejected": result.statistics > result.threshold,
            }
        )
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        self._logger.debug(f"wrote {len(frame)} rows to {path}")
        return path

    def write_clt_check(self, result: CltCheckResult, path: str) -> str:
        frame = pd.DataFrame([asdict(result)])
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        return path
