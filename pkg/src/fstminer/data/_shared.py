class HierarchyError(ValueError):
    """The item hierarchy is malformed (bad line, cycle)."""


class DataError(ValueError):
    """Input data refers to items the dictionary doesn't know about."""
