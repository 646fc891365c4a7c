"""Exception hierarchy. Every error raised by the library derives from MwGraphError."""


class MwGraphError(ValueError):
    pass


class NotSquare(MwGraphError):
    pass


class NotPsd(MwGraphError):
    pass


class NonFinite(MwGraphError):
    pass


class DimMismatch(MwGraphError):
    pass


class SelfLoop(MwGraphError):
    pass


class DuplicateEdge(MwGraphError):
    pass


class BadVertexId(MwGraphError):
    pass


class WeightDimMismatch(MwGraphError):
    pass


class NotAPath(MwGraphError):
    pass


class PathBudgetExceeded(MwGraphError):
    """Brute-force path enumeration hit its configured cap."""

    def __init__(self, budget: int, pair=None):
        self.budget = budget
        self.pair = pair
        where = f" while testing pair {pair}" if pair is not None else ""
        super().__init__(f"more than {budget} simple paths enumerated{where}")


class GraphFileError(MwGraphError):
    """Malformed graph file; ``location`` names the line or JSON field."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class BadParams(MwGraphError):
    pass
