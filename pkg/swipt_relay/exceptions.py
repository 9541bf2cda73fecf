"""Error types raised by the toolkit and the exit codes the CLI maps them to."""


class SwiptRelayError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 1


class DomainError(SwiptRelayError, ValueError):
    """An argument lies outside the mathematical domain of a function."""

    exit_code = 2


class ArgumentError(SwiptRelayError, ValueError):
    """A caller supplied a missing, superfluous or malformed argument."""

    exit_code = 2


class OutageRangeError(SwiptRelayError, ArithmeticError):
    """An outage probability underflowed and cannot be used in a log-log fit."""

    exit_code = 2


class OutputError(SwiptRelayError, OSError):
    """A result file could not be read or written."""

    exit_code = 3
