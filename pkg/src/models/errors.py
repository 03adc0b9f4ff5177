"""Exception hierarchy for mip-delegate."""

from typing import Optional


class MIPError(Exception):
    """Base class for every error raised by mip-delegate."""

    pass


class InvalidEnvironmentError(MIPError, ValueError):
    """Raised when an environment or one of its parts is malformed."""

    pass


class EnvParseError(MIPError):
    """Raised when an environment document cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        """Initialize parse error.

        Args:
            message: Human readable description
            line: 1-based line number of the offending record, if known
        """
        self.line = line
        self.reason = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownEnvironmentError(MIPError):
    """Raised when a builtin environment name or source is not recognised."""

    pass


class UnexpandedSkillError(MIPError):
    """Raised when a trace still contains skills where only actions are allowed."""

    pass


class PlanningError(MIPError):
    """Base class for failures of the delegation planner."""

    reason = "planning-error"


class UnreachableGoalError(PlanningError):
    """A goal proposition has no skill able to satisfy it."""

    reason = "unreachable-goal"


class DelegationDeadEndError(PlanningError):
    """An unmet condition has no non-ancestor skill able to satisfy it."""

    reason = "delegation-dead-end"


class HorizonExceededError(PlanningError):
    """A generated plan is longer than the configured horizon."""

    reason = "horizon-exceeded"


class StateSpaceTooLargeError(MIPError):
    """Raised when exhaustive search is requested on too many features."""

    pass


class InapplicablePlannerError(MIPError):
    """Raised when a planner cannot operate on the given environment."""

    pass


class MemoryBudgetExceededError(MIPError):
    """Raised when a tabular learner exceeds its state-action pair budget."""

    pass


class BenchmarkConfigError(MIPError, ValueError):
    """Raised when a benchmark configuration cannot be run as given."""

    pass
