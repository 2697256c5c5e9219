"""Exception types raised across the package."""


class HeadSwapError(Exception):
    """Base class for all package errors."""


class TaxonomyError(HeadSwapError, ValueError):
    """Class index or class group outside the 20-class taxonomy."""


class ShapeError(HeadSwapError, ValueError):
    """Array dimensions incompatible with the operation."""


class RangeError(HeadSwapError, ValueError):
    """Scalar argument outside its permitted range."""


class ConfigError(HeadSwapError, ValueError):
    """Invalid configuration value or empty dataset."""


class EmptyRegionError(HeadSwapError, ValueError):
    """An operation needed pixels of a class that the layout lacks."""


class PartitionError(HeadSwapError, ValueError):
    """Region masks do not form an exact partition of the frame."""


class InsufficientDataError(HeadSwapError, ValueError):
    """Too few samples to compute the requested statistic."""


class PairingError(HeadSwapError, ValueError):
    """Image set and layout set cannot be paired one-to-one."""


class NumericalError(HeadSwapError, ArithmeticError):
    """Numerical guard tripped (indefinite covariance, negative radicand)."""


class ReplacementSpecError(HeadSwapError, ValueError):
    """Region replacement spec has overlapping or inconsistent groups."""


class ParamsError(HeadSwapError, ValueError):
    """Person parameters describe out-of-frame or degenerate geometry."""


class EmbedderContractError(HeadSwapError, ValueError):
    """A face embedder returned a vector violating the unit-norm contract."""
