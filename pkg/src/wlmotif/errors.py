"""Exception hierarchy shared by every module."""

from __future__ import annotations


class WLMotifError(Exception):
    """Base class for all library errors."""


class GuardExceeded(WLMotifError):
    """A size guard refused an input that would blow up exhaustive search.

    The message always names the guard, the measured value and the bound.
    """

    def __init__(self, guard: str, value, bound, hint: str = ""):
        self.guard = guard
        self.value = value
        self.bound = bound
        msg = f"guard '{guard}' exceeded: measured {value}, bound {bound}"
        if hint:
            msg += f" ({hint})"
        super().__init__(msg)


class GraphParseError(WLMotifError, ValueError):
    """Malformed graph document."""


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class DanglingVertexError(GraphParseError):
    pass


class QuotientRejected(WLMotifError):
    """A partition does not yield a valid labeled quotient."""

    reason = "rejected"


class LoopCreated(QuotientRejected):
    reason = "loop"


class VertexLabelClash(QuotientRejected):
    reason = "vertex-label"


class ParallelEdgeLabelClash(QuotientRejected):
    reason = "edge-label"


class DimensionMismatch(WLMotifError, ValueError):
    pass


class InvalidDecomposition(WLMotifError, ValueError):
    pass


class AnchorError(WLMotifError, ValueError):
    """Anchor tuple cannot be realised inside a bag of a width-k decomposition."""


class WellDefinednessViolation(WLMotifError):
    """Two tuples with one stable colour disagree on a partial hom count.

    This would falsify the colour-count lemma; treat it as an internal bug.
    """


class TreewidthTooLarge(WLMotifError, ValueError):
    """A support member is wider than the requested WL dimension."""


class NotAHomomorphism(WLMotifError, ValueError):
    pass


class DisconnectedBase(WLMotifError, ValueError):
    pass
