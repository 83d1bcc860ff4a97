"""Codes for the sum channel: an l x n binary matrix is sent together with
the XOR of its rows, and the l+1 rows suffer deletions, insertions or
substitutions."""

from .bits import BitWord, CodeMatrix, ReceivedMatrix, format_matrices, parse_matrices
from .channel import ErrorEvent, apply_errors, corrupt, error_ball, is_correcting_code, sum_matrix
from .constructions import (
    Construction1Params,
    Construction2Params,
    Construction3Params,
    Construction4Params,
    c1_decode,
    c2_decode,
    c3_decode,
    c4_decode,
)
from .errors import AmbiguityError, DecodeFailure, InvalidArgument, ResourceLimitError, SumChannelError

__version__ = "0.1.0"
