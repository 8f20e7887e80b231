"""Exception types shared by every module.

The split mirrors the process exit codes: bad caller data is an
``InputError`` (exit 1 from the command line), a violated internal
consistency check is an ``InternalCheckError`` (exit 2).
"""


class InputError(ValueError):
    """Caller-supplied data violates a documented precondition."""


class InternalCheckError(RuntimeError):
    """A result failed one of the library's own consistency checks.

    These guard theorems the code relies on (gradedness of face posets,
    unimodularity of transforms, and similar).  Seeing one means a bug,
    not bad input.
    """
