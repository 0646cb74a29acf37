"""Exception types shared across the library."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Evaluation was requested on a singular locus (kernel argument zero)."""


class ConfigError(ValueError):
    """Inconsistent or unstable solver configuration."""


class SeparabilityError(ValueError):
    """Operation requires a separable profile f(x, y) = g(x) * h(y)."""
