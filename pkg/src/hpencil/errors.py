"""Exception and warning types raised across the package."""


class PencilError(Exception):
    """Base class for hard failures."""


class DimensionMismatch(PencilError, ValueError):
    pass


class NotHermitian(PencilError, ValueError):
    pass


class SingularTransform(PencilError, ValueError):
    pass


class SpecInvalid(PencilError, ValueError):
    pass


class BackendFailure(PencilError, RuntimeError):
    pass


class SuspectSingular(PencilError, RuntimeError):
    """The pencil handed to the regular solver looks singular."""


class BadPrescribed(PencilError, ValueError):
    pass


class BadTau(PencilError, ValueError):
    pass


class DegeneratePencil(PencilError, ValueError):
    """Normal rank zero, or k outside its admissible range."""


class NotSemisimple(PencilError, ValueError):
    pass


class EmptyGroup(PencilError, ValueError):
    pass


class StructureViolation(PencilError, ValueError):
    pass


class DegreeTooHigh(PencilError, ValueError):
    pass


class NoFiniteRoots(PencilError, RuntimeError):
    pass


class ParseError(PencilError, ValueError):
    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)
        self.path = path
        self.line = line


# Soft diagnostics. The computation still produces a result; the condition is
# recorded on the result object and emitted through ``warnings``.

class Diagnostic(UserWarning):
    pass


class ThresholdAmbiguous(Diagnostic):
    pass


class OddRandomCount(Diagnostic):
    pass


class PairingAmbiguous(Diagnostic):
    pass


class GroupSpread(Diagnostic):
    pass
