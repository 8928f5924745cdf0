from typing import Tuple


class GallaiError(Exception):
    """
    Base class for every error raised by the package.
    """


class InvalidParameterError(GallaiError, ValueError):
    """
    A precondition of an operation was violated by its caller.
    """


class ConstructionError(GallaiError, RuntimeError):
    """
    An internal assertion of a construction or a surgery step failed.
    """


class DocumentError(GallaiError, ValueError):
    """
    A serialized decomposition document could not be parsed.
    """


class TrimError(InvalidParameterError):
    def __init__(self, index: int, edge: Tuple[int, int], reason: str):
        self.index = index
        self.edge = edge
        self.reason = reason
        super().__init__(f"removal #{index} {edge[0]}-{edge[1]}: {reason}")
