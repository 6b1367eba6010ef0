"""Shared exception types and enumeration limits."""

# Refuse exhaustive enumerations whose implied size exceeds this cap unless
# the caller raises it explicitly.  Large enough for every desk-scale run
# (q <= 3, n <= 3), small enough to reject accidental blowups up front.
DEFAULT_ENUM_BOUND = 1_000_000


class BoundExceededError(RuntimeError):
    """An exhaustive enumeration was refused because it would be too large."""

    def __init__(self, implied: int, bound: int, what: str = "enumeration"):
        self.implied = implied
        self.bound = bound
        super().__init__(f"{what} would visit {implied} items, above the bound {bound}")
