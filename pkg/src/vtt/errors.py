"""Exception types shared across the package."""


class SizeLimitError(Exception):
    """An input exceeds a configured resource cap (vertex cap, bit budget)."""


class InconsistencyError(Exception):
    """An exact arithmetic identity that must hold failed.

    This always signals a bug or a malformed input (e.g. an element list that
    is not actually a group), never a legitimate runtime condition.
    """
