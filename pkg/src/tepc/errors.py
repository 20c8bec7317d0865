"""Exception hierarchy shared by every module."""


class TepcError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(TepcError, ValueError):
    """A family parameter is outside its allowed range."""


class UnsupportedSize(TepcError):
    """The input is larger than the configured bound for a brute-force routine."""


class BindingMismatch(TepcError, ValueError):
    """A labeling was applied to a graph it was not built for."""


class NotLabelable(TepcError):
    """The requested graph admits no total edge product cordial labeling."""


class WitnessFound(TepcError):
    """A non-existence claim was refuted by an explicit labeling."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
