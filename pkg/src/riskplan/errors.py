"""Exception hierarchy shared by all riskplan modules."""


class RiskplanError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RiskplanError):
    """A file could not be decoded (malformed JSON, bad encoding)."""


class SchemaError(RiskplanError):
    """A document misses required keys or carries unknown ones."""


class ValidationError(RiskplanError):
    """A structurally valid document violates a model invariant."""


class ConfigurationError(RiskplanError):
    """A planner configuration value is unusable (e.g. empty sampling grid)."""


class NumericalInputError(RiskplanError):
    """A numerical routine received out-of-domain input (e.g. non-PSD covariance)."""


class PlannerFault(RiskplanError):
    """The planner ended a cycle without any candidate trajectory."""
