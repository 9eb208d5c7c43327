"""Exception hierarchy. Every library error is a ValueError subclass so the CLI
can map the whole family to exit code 2."""


class LefschetzError(ValueError):
    """Base class for invalid numerical input."""


class EmptyFunction(LefschetzError):
    pass


class InvalidIndex(LefschetzError):
    pass


class NegativeEntry(LefschetzError):
    pass


class InvalidHilbertFunction(LefschetzError):
    pass


# degree sequences

class GaetaError(LefschetzError):
    pass


class NotSorted(GaetaError):
    pass


class EvenLength(GaetaError):
    pass


class TooShort(GaetaError):
    pass


class NonPositiveDegree(GaetaError):
    pass


class NonIntegerTheta(GaetaError):
    pass


class PairBound(GaetaError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"index {index}")


class WouldEmptySequence(LefschetzError):
    pass


# linkage

class RegorEmpty(LefschetzError):
    pass


class TrivialLink(LefschetzError):
    pass


class NegativeValue(LefschetzError):
    """Linked Hilbert function went negative. Indicates a defect, never valid input."""


# monomial oracle

class NotArtinian(LefschetzError):
    pass


class DuplicateGenerator(LefschetzError):
    pass
