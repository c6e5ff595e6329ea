# /src/utils/errors.py

"""Exception hierarchy shared by every torprod module.

Each error carries a human-readable detail and the process exit code
the command line reports for it: 2 for bad input or a violated
hypothesis, 1 for anything that indicates a bug.
"""

__all__ = [
    "TorprodError", "InputError", "InternalError",
    "ParseError", "NotSimple", "Disconnected", "DuplicateVertex",
    "DimensionMismatch", "DegenerateFunctional", "InvalidOrdering",
    "InvalidCharFunction", "WrongRing", "HypothesisViolation", "BadP",
    "EmptyBase", "UnsupportedFamily", "TorsionDetected",
    "BoundaryNotSquareZero", "PresentationMismatch",
]


class TorprodError(Exception):
    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    def __str__(self) -> str:
        return f"{type(self).__name__}: {self.detail}"


class InputError(TorprodError):
    exit_code = 2


class InternalError(TorprodError):
    exit_code = 1


# --- input ---------------------------------------------------------------

class ParseError(InputError):
    pass


class NotSimple(InputError):
    pass


class Disconnected(InputError):
    pass


class DuplicateVertex(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class DegenerateFunctional(InputError):
    pass


class InvalidOrdering(InputError):
    pass


class InvalidCharFunction(InputError):
    pass


class WrongRing(InputError):
    pass


class HypothesisViolation(InputError):
    pass


class BadP(HypothesisViolation):
    pass


class EmptyBase(HypothesisViolation):
    pass


class UnsupportedFamily(InputError):
    pass


# --- internal ------------------------------------------------------------

class TorsionDetected(InternalError):
    pass


class BoundaryNotSquareZero(InternalError):
    pass


class PresentationMismatch(InternalError):
    pass
