"""Exception hierarchy shared by the library, the CLI, and the service.

The CLI maps these onto distinct exit codes (invalid input = 2, budget
exceeded = 3, broken internal invariant = 4), and the HTTP service maps
them onto status codes, so everything below user code should raise one
of these rather than a bare ValueError.
"""


class VufError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(VufError):
    """A caller-supplied value violates a documented precondition."""


class BudgetExceededError(VufError):
    """A brute-force enumeration would exceed the configured budget."""


class InternalCheckError(VufError):
    """A self-check that should never fail did fail."""
