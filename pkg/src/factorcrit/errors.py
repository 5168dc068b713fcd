"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid input: bad vertex index, missing edge, violated precondition."""


class Graph6Error(GraphError):
    """Malformed graph6 data. ``offset`` is the byte position of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.reason = message
        self.offset = offset


class CapabilityError(GraphError):
    """The request is valid but beyond what the built-in algorithms support."""


class ContractViolation(RuntimeError):
    """A structure the theory guarantees could not be found.

    Raised when the input does not actually satisfy the hypotheses the caller
    claimed (for example a graph that is not minimal k-factor-critical).
    """
