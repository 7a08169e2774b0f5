"""Exception types shared across the library.

Plain ``ValueError`` is raised for ordinary domain errors (bad mode index,
out-of-range occupation, malformed input). The two classes below mark the
stronger failure modes that callers may want to catch separately.
"""


class ContractViolation(ValueError):
    """An input broke a numerical contract (e.g. a matrix that must be
    Hermitian or unitary within tolerance is not)."""


class ConvergenceError(RuntimeError):
    """A computation could not be certified converged at the requested
    truncation (e.g. eigenvalues still moving when the cutoff is raised)."""
