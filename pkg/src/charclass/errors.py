"""Exception hierarchy shared by the library, the HTTP service and the CLI.

Every error carries a short machine ``code`` so that the service can emit a
structured error body and the CLI can map it to a stable exit status.
"""

# CLI exit statuses, also used by the bench report.
EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GENERICITY = 3
EXIT_UNSUPPORTED = 4
EXIT_INTERNAL = 5


class CharclassError(Exception):
    """Base class for all errors raised on purpose by this package."""

    code = "internal"
    exit_status = EXIT_INTERNAL


class PolyParseError(CharclassError):
    """Malformed polynomial expression.

    ``position`` is the 0-based character offset into the offending text.
    """

    code = "parse"
    exit_status = EXIT_PARSE

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class ProblemFileError(CharclassError):
    """Malformed problem file (bad directive, bad value, missing file...)."""

    code = "parse"
    exit_status = EXIT_PARSE

    def __init__(self, message: str, path: str = "<input>", line: int | None = None):
        self.path = path
        self.line = line
        where = path if line is None else f"{path}:{line}"
        super().__init__(f"{where}: {message}")


class UnsupportedInputError(CharclassError):
    """Input outside the supported domain (zero ideal, degree >= p, ...)."""

    code = "unsupported"
    exit_status = EXIT_UNSUPPORTED


class GenericityError(CharclassError):
    """Random scalar draws kept landing outside the generic locus.

    Retrying with a different seed, or with a larger characteristic, usually
    resolves this.
    """

    code = "genericity"
    exit_status = EXIT_GENERICITY


class DimensionError(CharclassError):
    """A quotient expected to be zero-dimensional was not.

    Callers that built the ideal from random scalars catch this and resample;
    it only escapes to users via :class:`GenericityError`.
    """

    code = "genericity"
    exit_status = EXIT_GENERICITY


class InternalError(CharclassError):
    """An internal consistency check failed; this is a bug, not bad input."""

    code = "internal"
    exit_status = EXIT_INTERNAL
