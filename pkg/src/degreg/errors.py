"""Exception hierarchy shared by all modules."""


class DegRegError(ValueError):
    """Base class for every error raised by this package."""


class DegenerateFace(DegRegError):
    pass


class EmptyInput(DegRegError):
    pass


class ParseError(DegRegError):
    pass


class NotACycle(DegRegError):
    """The link of a vertex is not a single cycle."""

    def __init__(self, vertex, reason):
        super().__init__(f"link of vertex {vertex} is not a cycle: {reason}")
        self.vertex = vertex
        self.reason = reason


class NotManifold(DegRegError):
    pass


class NotConnected(DegRegError):
    pass


class OddParity(DegRegError):
    pass


class UnknownVertex(DegRegError):
    pass


class NotAutomorphism(DegRegError):
    pass


class NotOrientable(DegRegError):
    pass


class InvalidMap(DegRegError):
    pass


class InfeasibleParameters(DegRegError):
    pass


class ReconstructionIncomplete(DegRegError):
    pass


class NoMatch(DegRegError):
    pass


class CorruptCatalog(DegRegError):
    pass
