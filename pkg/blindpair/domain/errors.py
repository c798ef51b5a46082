class BlindPairError(Exception):
    """blindpair が送出する例外の基底クラス"""


class EmptySample(BlindPairError, ValueError):
    def __init__(self, message: str = "sample is empty"):
        super().__init__(message)


class BadValue(BlindPairError, ValueError):
    """入力行に非有限値 (NaN, ±inf) が含まれる

    Attributes:
        row_index (int): 0始まりの行番号
    """

    def __init__(self, row_index: int, message: str | None = None):
        self.row_index = row_index
        super().__init__(message or f"non-finite value in row {row_index}")


class DomainError(BlindPairError, ValueError):
    pass


class OutsideDomain(BlindPairError, ValueError):
    """(s, t) が判別式 >= 0 の領域 (厳密に > 0 を要求する演算ではその内部) の外"""


class BadRegion(BlindPairError, ValueError):
    def __init__(self, u: float, v: float):
        self.u = u
        self.v = v
        super().__init__(f"expected u <= v, got u={u!r}, v={v!r}")


class NumericalNonconvergence(BlindPairError, ArithmeticError):
    pass


class CacheMismatch(BlindPairError):
    pass


class InputFileError(BlindPairError, OSError):
    pass
