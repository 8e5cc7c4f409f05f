"""Exception hierarchy shared by every layer of the engine.

Exit-code mapping used by the CLI: InputError -> 2, CapabilityError -> 3,
InternalInconsistencyError -> 1 (a nonzero exit with a witness dump; it means
a computation contradicted a statement the engine treats as proved, i.e. a bug).
"""


class CotiltError(Exception):
    """Base class for all engine errors."""


class InputError(CotiltError):
    """Malformed or inconsistent user input (files, presentations, arguments)."""


class CapabilityError(CotiltError):
    """The request is well-formed but exceeds a configured enumeration budget
    or the supported algebra families."""


class RegistryIncompleteError(CapabilityError):
    """An operation that needs a complete list of indecomposables was invoked
    on a registry that is not known to be complete."""


class InternalInconsistencyError(CotiltError):
    """Two characterizations that must agree disagreed, or a verified
    construction failed verification."""
