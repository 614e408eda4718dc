"""Exception types. Every error carries a short machine-readable ``code``."""

from __future__ import annotations


class LandinError(Exception):
    code = "E_LANDIN"

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class EmptyLanguageError(LandinError, ValueError):
    code = "E_EMPTY"


class DepthError(LandinError, ValueError):
    code = "E_DEPTH"


class DimensionError(LandinError, ValueError):
    code = "E_DIM"


class SignatureError(LandinError, ValueError):
    code = "E_SIG"


class MapError(LandinError, ValueError):
    code = "E_MAP"


class NotFinitelyGeneratedError(LandinError, ValueError):
    code = "E_NOT_FG"


class CongruenceError(LandinError, ValueError):
    code = "E_CONG"


class CheckIdError(LandinError, KeyError):
    code = "E_CHECK_ID"


class VariableError(LandinError, ValueError):
    code = "E_VAR"


class ConcurrencyError(LandinError, ValueError):
    code = "E_CONC"


class CanonicalError(LandinError, ValueError):
    code = "E_CANON"


class LimitError(LandinError, ValueError):
    """Raised instead of running an exponential enumeration past its guard."""

    code = "E_LIMIT"


class SymbolError(LandinError, ValueError):
    code = "E_SYMBOL"


class ParseError(LandinError, ValueError):
    code = "E_PARSE"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.code}: line {self.line}, column {self.column}: {self.message}"
