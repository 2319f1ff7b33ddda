"""Exception hierarchy shared across the toolkit."""


class CcpError(Exception):
    """Base class for all toolkit-specific errors."""


class ShapeError(CcpError):
    """An operation received a trace of the wrong shape (pair vs plain)."""


class DomainError(CcpError):
    """An argument fell outside an operation's domain (empty trace, bad index,
    unmapped event)."""


class CompositionError(CcpError):
    """Positionwise composition of traces hit overlapping or ill-formed
    elements."""


class ValidationError(CcpError):
    """A process term violates a structural invariant."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class NotATraceError(CcpError):
    """A trace was replayed against a process that does not offer it."""


class InterfaceError(CcpError):
    """Arguments that must agree (alphabets, depths, guard sets) do not."""


class ResourceLimitError(CcpError):
    """Enumeration aborted after exceeding the configured trace budget."""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"trace enumeration exceeded the limit of {limit} traces")
