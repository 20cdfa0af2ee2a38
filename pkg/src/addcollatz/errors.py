"""Exception types shared across the package."""


class InvariantViolation(RuntimeError):
    """An arithmetic identity that must hold exactly did not.

    Raised e.g. when an orbit-count division leaves a remainder. This is
    never a user error; it means the library itself is inconsistent and
    must abort loudly.
    """


class CapExceededError(ValueError):
    """An iteration cap ran out before a verdict was reached."""
