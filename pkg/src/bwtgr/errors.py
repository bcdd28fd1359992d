"""Exception types shared across the package."""


class Error(ValueError):
    """Base class for domain errors raised by this package."""


class EmptyWordError(Error):
    """An operation that needs at least one letter was given the empty word."""


class NotPrimitiveError(Error):
    """A word required to be primitive is a proper power of a shorter word."""

    def __init__(self, word: bytes, root: bytes):
        self.word = word
        self.root = root
        super().__init__(
            f"word of length {len(word)} is not primitive: "
            f"it equals {root!r} repeated {len(word) // len(root)} times"
        )


class NotLyndonError(Error):
    """A word required to be Lyndon is not minimal among its rotations."""


class InvalidBwtError(Error):
    """The input is not a valid cyclic transform of any primitive word."""


class ContainerFormatError(Error):
    """A serialized container is malformed."""


class LimitExceededError(Error):
    """An enumeration was requested beyond the configured size guard."""
