"""Exception hierarchy shared by every module.

The CLI maps each class to a fixed exit code, see ``sumchannel.cli``.
"""


class SumChannelError(Exception):
    exit_code = 1


class InvalidArgument(SumChannelError, ValueError):
    exit_code = 2


class DecodeFailure(SumChannelError):
    """No codeword is consistent with the received data."""

    exit_code = 3


class AmbiguityError(SumChannelError):
    """More than one codeword is consistent with the received data."""

    exit_code = 4


class ResourceLimitError(SumChannelError):
    """An enumeration would exceed its configured cap."""

    exit_code = 5

    def __init__(self, what, needed, cap):
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: needs {needed} candidates, cap is {cap}")
