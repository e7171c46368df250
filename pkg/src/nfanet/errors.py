"""Exception and warning types shared across the pipeline."""


class NFANetError(Exception):
    """Base class for errors raised by this package."""


class ShapeError(NFANetError):
    """An array has the wrong shape, dtype domain, or incompatible dimensions."""


class ConfigError(NFANetError):
    """A configuration value is out of its valid range."""


class DataError(NFANetError):
    """Images and labels do not line up (counts, shapes, ids)."""


class EmptyCorpusError(NFANetError):
    """An operation that needs at least one item received none."""


class DegenerateInputWarning(UserWarning):
    """Input carries no usable signal (e.g. a constant map handed to Otsu)."""


class EmptyPointsWarning(UserWarning):
    """A point-label set is empty, so point-supervised steps are vacuous."""


class ThinComponentWarning(UserWarning):
    """A component was too thin to hold a full 5x5 interior square."""
