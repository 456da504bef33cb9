"""
Иерархия исключений конвейера SGB.

Каждый класс несёт ``exit_code``, который CLI возвращает процессу:
1 — ошибка использования, 2 — ошибка валидации, 4 — численная ошибка.
Код 3 (расхождение с замкнутыми формулами) исключением не является.
"""
from __future__ import annotations

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
EXIT_NUMERIC = 4


class SgbError(Exception):
    exit_code = EXIT_VALIDATION


# ----------------------------- usage ---------------------------------------
class GroupSpecError(SgbError, ValueError):
    """Токен вида ``family:parameter`` не разобран."""
    exit_code = EXIT_USAGE


# ----------------------------- validation ----------------------------------
class InvalidOrderError(SgbError, ValueError):
    pass


class CayleyTableError(SgbError, ValueError):
    pass


class NotSquareError(CayleyTableError):
    pass


class EntryOutOfRangeError(CayleyTableError):
    pass


class LatinSquareError(CayleyTableError):
    pass


class NoIdentityError(CayleyTableError):
    pass


class MissingInverseError(CayleyTableError):
    pass


class AssociativityError(CayleyTableError):
    pass


class CayleyLabelMismatch(InvalidOrderError):
    def __init__(self, order: int, got: int):
        super().__init__(f"{got} labels for a group of order {order}")


class CayleyFileError(SgbError):
    """Файл таблицы Кэли не прочитан."""


class CayleyParseError(SgbError, ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NotInLatticeError(SgbError, KeyError):
    """Множества элементов нет в решётке: ошибка выше по конвейеру."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "not a subgroup of this lattice"


class OrderLimitError(SgbError, ValueError):
    pass


class InadmissibleFamilyError(SgbError, ValueError):
    pass


class NotAdjacencyError(SgbError, ValueError):
    pass


# ----------------------------- numeric -------------------------------------
class NumericError(SgbError, ArithmeticError):
    exit_code = EXIT_NUMERIC


class ConvergenceError(NumericError):
    pass


class DimensionLimitError(NumericError):
    pass


class SpectrumLengthError(NumericError):
    pass


class IndeterminateComparisonError(NumericError):
    pass
