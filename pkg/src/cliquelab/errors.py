"""Exception taxonomy shared by all modules.

Two families matter for the CLI exit-code contract: domain errors
(bad inputs, exit code 1) and resource-limit errors (search budgets and
enumeration caps, exit code 2).
"""


class CliquelabError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CliquelabError, ValueError):
    """A precondition on the inputs is violated."""


class AsymptoticRegimeError(DomainError):
    """floor(z - eps) < 1: the requested clique target is not yet defined
    at this (n, p, eps)."""


class ResourceLimitError(CliquelabError):
    """A configured budget or cap was exceeded before the answer was found."""


class BudgetExceededError(ResourceLimitError):
    """A branch-and-bound node budget ran out."""


class EnumerationCapError(ResourceLimitError):
    """An enumeration produced more items than the configured cap."""


class DTooLargeError(EnumerationCapError):
    """The intersection-type matrix family is too large to enumerate
    under the configured cap."""
