"""Exception hierarchy shared by every module."""


class HesitantError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class EmptyHFE(HesitantError, ValueError):
    """A hesitant fuzzy element must be nonempty."""


class RangeError(HesitantError, ValueError):
    """A grade lies outside [0, 1] or is not a finite number."""


class ArityError(HesitantError, ValueError):
    """Tuple lengths do not fit the requested operation."""


class WitnessError(HesitantError, ValueError):
    """Input does not satisfy the precondition of the non-lattice witness step."""


class OracleBudgetError(HesitantError, ValueError):
    """Exhaustive enumeration was requested over a universe that is too large."""


class SampleError(HesitantError, ValueError):
    """A sampled instance does not satisfy the precondition of a checker."""


class ConfigError(HesitantError, ValueError):
    """An evaluation configuration is malformed or incomplete."""


class ParseError(HesitantError, ValueError):
    """A document could not be parsed into hesitant fuzzy values."""


class InternalError(HesitantError, RuntimeError):
    """A construction produced a value that violates its own postcondition."""
