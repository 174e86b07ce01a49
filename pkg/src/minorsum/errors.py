"""Exception types shared across the package."""

from __future__ import annotations


class MinorSumError(Exception):
    """Base class for all errors raised by this package."""


class ScalarParseError(MinorSumError, ValueError):
    """A token is not a valid exact-scalar literal."""


class MatrixParseError(MinorSumError, ValueError):
    """A matrix file or text block is malformed."""


class NotHermitianError(MinorSumError, ValueError):
    """Input entries are not conjugate-symmetric.

    Carries the first offending one-based position found during the
    row-major scan of the upper triangle.
    """

    def __init__(self, row: int, col: int, message: str | None = None) -> None:
        self.row = row
        self.col = col
        super().__init__(
            message
            or f"entry ({row},{col}) is not the conjugate of entry ({col},{row})"
        )


class SingularLeadingBlockError(MinorSumError):
    """A leading block submatrix that must be invertible has determinant zero."""

    def __init__(self, prefix_size: int) -> None:
        self.prefix_size = prefix_size
        super().__init__(
            f"leading {prefix_size}x{prefix_size} block submatrix is singular"
        )


class InadmissiblePartitionError(MinorSumError):
    """The partition violates the nonsingular-leading-blocks hypothesis."""

    def __init__(self, prefix_size: int) -> None:
        self.prefix_size = prefix_size
        super().__init__(
            "partition is inadmissible: leading "
            f"{prefix_size}x{prefix_size} block submatrix is singular"
        )


class ZeroInteriorSigmaError(MinorSumError):
    """A sigma value at or below the rank index is zero, so the diagonal
    form with minor-sum ratio coefficients does not exist."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"sigma_{index} = 0 at or below the rank index")


class SizeLimitError(MinorSumError):
    """The requested enumeration is too large for a desk-scale exact tool."""


class InternalCheckError(MinorSumError):
    """An internal consistency check failed; a bug, not bad input."""
