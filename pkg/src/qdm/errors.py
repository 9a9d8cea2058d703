"""Exception types shared across the package."""


class QdmError(Exception):
    """Base class for all package errors."""


class BasisMismatchError(QdmError):
    """Operands are defined on incompatible bases."""


class UnitarityError(QdmError):
    """A matrix expected to be unitary is not, beyond tolerance."""


class PositivityError(QdmError):
    """A density matrix has a negative eigenvalue beyond tolerance."""


class EmptySubspaceError(QdmError):
    """The projected subspace carries (numerically) no population."""


class QuadratureError(QdmError):
    """A numerical quadrature failed to reach the requested accuracy."""


class DegenerateBasisError(QdmError):
    """The dressed-basis construction is ill defined for these inputs."""


class DegenerateSteadyStateError(QdmError):
    """The Liouvillian null space is not one dimensional."""


class StiffnessError(QdmError):
    """The adaptive integrator collapsed its step size."""


class ConvergenceTimeoutError(QdmError):
    """The state did not reach the steady state within the time budget."""


class DomainError(QdmError):
    """An argument is outside the mathematical domain of the operation."""


class ConfigError(QdmError):
    """A scenario configuration violates the schema or its invariants."""
