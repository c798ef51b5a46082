import re
from logging import getLogger
from typing import List, Tuple

import numpy as np
import pandas as pd

from blindpair.domain.entities import EvalGrid
from blindpair.domain.errors import BadValue, InputFileError
from blindpair.domain.repositories import IPairReaderRepository


def _is_number(value: object) -> bool:
    try:
        float(str(value))
        return True
    except ValueError:
        return False


class PandasPairReaderRepository(IPairReaderRepository):
    def __init__(self, delimiter: str = ","):
        """PandasPairReaderRepositoryの初期化

        Args:
            delimiter (str, optional): 区切り文字. Defaults to ",".
        """
        self._delimiter = delimiter
        self._logger = getLogger(__name__)

    def _header_lines(self, path: str) -> int:
        """先頭行がヘッダなら 1, そうでなければ 0"""
        try:
            first = pd.read_csv(
                path, sep=self._delimiter, header=None, nrows=1, dtype=str, skipinitialspace=True
            )
        except (pd.errors.ParserError, pd.errors.EmptyDataError):
            return 0
        return 0 if all(_is_number(v) for v in first.iloc[0]) else 1

    def _read_frame(self, path: str) -> pd.DataFrame:
        try:
            frame = pd.read_csv(
                path,
                sep=self._delimiter,
                header=None,
                dtype=str,
                skip_blank_lines=True,
                skipinitialspace=True,
            )
        except FileNotFoundError as e:
            raise InputFileError(f"input file not found: {path}") from e
        except pd.errors.EmptyDataError as e:
            raise InputFileError(f"input file is empty: {path}") from e
        except pd.errors.ParserError as e:
            # e.g. "Expected 2 fields in line 7, saw 3". 行番号はヘッダを含む1始まり
            match = re.search(r"line (\d+)", str(e))
            row_index = int(match.group(1)) - 1 - self._header_lines(path) if match else -1
            raise BadValue(row_index, f"malformed CSV: {e}") from e
        except (OSError, UnicodeDecodeError) as e:
            raise InputFileError(f"cannot read input file {path}: {e}") from e

        # 先頭行に数値でない値があればヘッダとみなす
        if len(frame) > 0 and not all(_is_number(v) for v in frame.iloc[0]):
            self._logger.debug(f"header detected: {list(frame.iloc[0])}")
            frame = frame.iloc[1:].reset_index(drop=True)
        if len(frame) == 0:
            raise InputFileError(f"input file has no data rows: {path}")
        return frame

    def read_rows(self, path: str) -> List[Tuple[float, float]]:
        frame = self._read_frame(path)
        if frame.shape[1] != 2:
            raise BadValue(0, f"expected 2 columns, found {frame.shape[1]}")
        numeric = frame.apply(pd.to_numeric, errors="coerce").to_numpy(dtype=np.float64)
        self._logger.info(f"read {len(numeric)} rows from {path}")
        return [(float(a), float(b)) for a, b in numeric]

    def read_grid(self, path: str) -> EvalGrid:
        frame = self._read_frame(path)
        values = pd.to_numeric(frame.iloc[:, 0], errors="coerce").to_numpy(dtype=np.float64)
        bad = np.flatnonzero(~np.isfinite(values))
        if len(bad) > 0:
            raise BadValue(int(bad[0]))
        return EvalGrid.from_values(values)
