"""Exception types shared across the package."""


class HyperlooseError(Exception):
    """Base class for every error raised by hyperloose."""


class BudgetExhausted(HyperlooseError):
    """A bounded search hit its node limit before reaching a verdict.

    Distinct from a ``None`` result: ``None`` means the search space was
    exhausted and nothing exists.
    """

    def __init__(self, nodes: int, message: str = "") -> None:
        self.nodes = nodes
        super().__init__(message or f"node limit reached after {nodes} nodes")


class PreconditionViolated(HyperlooseError):
    """The input does not satisfy the hypothesis an operation relies on."""

    def __init__(self, message: str, witness=None) -> None:
        self.witness = witness
        super().__init__(message)


class InternalContradiction(HyperlooseError):
    """A guaranteed object was not found; a proven bound would be false."""


class OutOfBudget(HyperlooseError):
    """Exact counting refused: the parameters are outside the feasible range."""
