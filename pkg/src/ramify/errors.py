"""Error taxonomy.

Every error carries a stable ``code`` (used in the JSON error stream of the
CLI) and an ``exit_code``:

    2  input error
    3  precision cap exceeded
    4  unsupported construction
    5  internal invariant violation
"""

from __future__ import annotations


class RamifyError(Exception):
    code = "InternalError"
    exit_code = 5

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details = details

    def to_json(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in sorted(self.details.items())}
        return out


def _jsonable(v):
    if isinstance(v, (str, int, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


# -- input errors -----------------------------------------------------------

class InputError(RamifyError):
    code = "InputError"
    exit_code = 2


class ParseError(InputError):
    code = "SyntaxError"

    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        msg = f"line {line}, col {col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg, line=line, col=col, expected=expected, found=found)
        self.line = line
        self.col = col
        self.expected = expected


class DivisionByZero(InputError, ZeroDivisionError):
    code = "DivisionByZero"


class FieldMismatch(InputError):
    code = "FieldMismatch"


class NotEisenstein(InputError):
    code = "NotEisenstein"


class NotUnitMonogenic(InputError):
    code = "NotUnitMonogenic"


class Inseparable(InputError):
    code = "Inseparable"


class ReducibleResidue(InputError):
    code = "ReducibleResidue"


class NotCoprime(InputError):
    code = "NotCoprime"


class WrongDegree(InputError):
    code = "WrongDegree"


class TameInput(InputError):
    code = "TameInput"


class EtaleInput(InputError):
    code = "EtaleInput"


class FierceInput(InputError):
    code = "FierceInput"


class NotFierce(InputError):
    code = "NotFierce"


class HintRequired(InputError):
    code = "HintRequired"


class NotUltrametric(InputError):
    code = "NotUltrametric"


class NotRepresentable(InputError):
    code = "NotRepresentable"


class IncompleteSplitting(InputError):
    code = "IncompleteSplitting"


# -- precision ----------------------------------------------------------------

class PrecisionExhausted(RamifyError):
    """A result depends on coefficients beyond the known precision."""

    code = "PrecisionExhausted"
    exit_code = 3


class PrecisionCapExceeded(PrecisionExhausted):
    code = "PrecisionCapExceeded"


# -- unsupported constructions --------------------------------------------------

class Unsupported(RamifyError):
    code = "Unsupported"
    exit_code = 4


class UnsupportedTower(Unsupported):
    code = "UnsupportedTower"


class UndecidableResidue(Unsupported):
    code = "UndecidableResidue"


class UnsupportedResidue(Unsupported):
    code = "UnsupportedResidue"


class CompositeUnresolvable(Unsupported):
    code = "CompositeUnresolvable"


class NotNormalizable(Unsupported):
    code = "NotNormalizable"


class HenselFails(Unsupported):
    code = "HenselFails"


class SplitsAfterBaseChange(Unsupported):
    """The base-changed polynomial factors; ``factors`` holds what was found."""

    code = "SplitsAfterBaseChange"

    def __init__(self, message: str, factors=(), **details):
        super().__init__(message, factors=list(factors), **details)
        self.factors = tuple(factors)


# -- invariant violations -------------------------------------------------------

class InvariantViolation(RamifyError):
    code = "InvariantViolation"
    exit_code = 5


class LawViolation(InvariantViolation):
    code = "LawViolation"

    def __init__(self, law: str, message: str = ""):
        super().__init__(message or f"profile law violated: {law}", law=law)
        self.law = law
