class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured search cap."""


class UnitColonError(ValueError):
    """The colon ideal is the whole ring and has no proper monomial form."""
