"""Error types shared across the engine.

Every error carries a short machine-readable ``name`` (no "Error" suffix)
that the HTTP service echoes in response bodies.
"""

from __future__ import annotations


class NetviewError(Exception):
    """Base class for all engine errors."""

    name = "NetviewError"


class EmptyInputError(NetviewError):
    name = "EmptyInput"


class AllLinesMalformedError(NetviewError):
    name = "AllLinesMalformed"


class UnknownLabelError(NetviewError):
    name = "UnknownLabel"

    def __init__(self, unknown: list[tuple[str, int]]):
        # unknown: (label, 1-based line number) for every unresolved label
        self.unknown = list(unknown)
        listing = ", ".join(f"{label!r} (line {line})" for label, line in self.unknown)
        super().__init__(f"unknown labels: {listing}")


class EmptySeedSetError(NetviewError):
    name = "EmptySeedSet"


class InvalidNodeError(NetviewError):
    name = "InvalidNode"

    def __init__(self, node_id: int):
        self.node_id = node_id
        super().__init__(f"no node with id {node_id}")


class NoPathError(NetviewError):
    name = "NoPath"


class SameNodeError(NetviewError):
    name = "SameNode"


class TooFewSeedsError(NetviewError):
    name = "TooFewSeeds"


class SeedsDisconnectedError(NetviewError):
    name = "SeedsDisconnected"

    def __init__(self, pairs: list[tuple[int, int]]):
        # pairs of seed ids with no connecting path
        self.pairs = list(pairs)
        listing = ", ".join(f"({u}, {v})" for u, v in self.pairs)
        super().__init__(f"seed pairs in different components: {listing}")


class NegativeIterationsError(NetviewError):
    name = "NegativeIterations"


class EmptyScoresError(NetviewError):
    name = "EmptyScores"


class BadPaletteError(NetviewError):
    name = "BadPalette"


class NoEdgesError(NetviewError):
    name = "NoEdges"


class LayoutMismatchError(NetviewError):
    name = "LayoutMismatch"


class PathNotInSceneError(NetviewError):
    name = "PathNotInScene"


class BadVersionError(NetviewError):
    name = "BadVersion"


class SchemaViolationError(NetviewError):
    name = "SchemaViolation"

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


class DanglingEdgeError(NetviewError):
    name = "DanglingEdge"
