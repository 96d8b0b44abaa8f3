"""Exception hierarchy shared by every module of the package."""


class AltDistError(Exception):
    """Base class for all errors raised by :mod:`altdist`."""


class DiagramError(AltDistError, ValueError):
    """A diagram (or its text encoding) is invalid."""


class EmptyInputError(DiagramError):
    pass


class MalformedTokenError(DiagramError):
    def __init__(self, token, line=None):
        self.token = token
        self.line = line
        where = f" on line {line}" if line is not None else ""
        super().__init__(f"malformed token {token!r}{where}")


class EdgeMultiplicityError(DiagramError):
    def __init__(self, label, count):
        self.label = label
        self.count = count
        super().__init__(f"edge {label} appears {count} times (expected 2)")


class PlanarityError(DiagramError):
    """The rotation system fails the Euler check V - E + F = 2."""


class OrientationError(DiagramError):
    """Under-strand directions along a component contradict each other."""


class DisconnectedDiagramError(DiagramError):
    """The operation needs a connected projection."""


class CrossinglessComponentError(DiagramError):
    """Edge weights are undefined on a component without crossings."""


class CrossingIndexError(DiagramError, IndexError):
    pass


class BraidWordError(DiagramError):
    pass


class TangleError(DiagramError):
    """Base class for tangle-extension failures."""


class TangleNotAlternatingError(TangleError):
    pass


class TangleDoesNotExtendError(TangleError):
    pass


class ResourceLimitError(AltDistError):
    """A configured crossing cap was exceeded."""

    def __init__(self, what, crossings, cap):
        self.crossings = crossings
        self.cap = cap
        super().__init__(f"{what}: {crossings} crossings exceeds the cap of {cap}")


class ParameterRangeError(AltDistError, ValueError):
    """Parameters fall outside the range where a formula or cited fact holds."""


class JonesMismatchError(AltDistError):
    """Diagrams supplied as the same link have different Jones polynomials."""


class EmptyDimensionsError(AltDistError, ValueError):
    pass
