"""Exception taxonomy for the kit.

Every error raised by the public API derives from KatankitError so callers
can catch one base. The CLI maps UsageError subclasses to exit code 2 and
ValidationFailure subclasses to exit code 1.
"""


class KatankitError(Exception):
    """Base class for all kit errors."""


class UsageError(KatankitError):
    """Bad arguments or malformed input; CLI exit code 2."""


class ValidationFailure(KatankitError):
    """Data failed a consistency check; CLI exit code 1."""


class InvalidVariantError(UsageError):
    """Unknown cipher variant name."""


class InvalidKeyError(UsageError):
    """Key outside the 80-bit range or wrong hex width."""


class InvalidBlockError(UsageError):
    """Block outside the variant's width or wrong hex width."""


class BatchShapeError(UsageError):
    """Bit-slice batch does not fit the lane configuration."""


class InvalidRunError(UsageError):
    """Pipeline run request with no blocks or bad stage costs."""


class InvalidMetricError(UsageError):
    """Nonpositive frequency, time, or width fed to a metric."""


class BenchConfigError(UsageError):
    """Benchmark configuration out of range."""


class EquivalenceError(ValidationFailure):
    """Two engines disagreed on a workload they must agree on."""


class VectorParseError(UsageError):
    """Malformed test-vector file; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ReportValidationError(ValidationFailure):
    """Performance record violates a derived-value identity."""
