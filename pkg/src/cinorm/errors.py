"""Exception types shared across the library."""


class DescriptorMismatchError(ValueError):
    """Two elements from different groups were combined."""


class InfiniteGroupError(ValueError):
    """An exhaustive operation was requested on an infinite family."""


class GuardExceededError(RuntimeError):
    """An enumeration or search outgrew its resource guard."""


class NotCGeneratingError(ValueError):
    """A would-be conjugation-generating set fails to reach the whole group."""
