"""Exception types shared across the package."""


class CccSpectraError(Exception):
    """Base class for all errors raised by ccc_spectra."""


class InvalidParameters(CccSpectraError):
    """Family parameters outside the supported range."""


class OrderCapExceeded(CccSpectraError):
    """Requested group order exceeds the configured cap."""


class AbelianGroup(CccSpectraError):
    """The group has no non-central conjugacy classes, so no graph exists."""


class NotCliqueUnion(CccSpectraError):
    """A connected component of the graph is not complete."""


class NotRealizable(CccSpectraError):
    """Quotient parameters violate a divisibility/parity constraint."""


class UnknownQuotient(CccSpectraError):
    """The central quotient matches neither supported shape."""


class UnsupportedFamily(CccSpectraError):
    """No direct closed form exists for this family; use the quotient route."""


class TraceMismatch(CccSpectraError):
    """A spectrum's weighted sum disagrees with the matrix trace."""


class NoConvergence(CccSpectraError):
    """The iterative eigensolver did not reach the tolerance in time."""


class VerificationError(CccSpectraError):
    """An internal cross-check (structure or spectrum gate) failed."""
