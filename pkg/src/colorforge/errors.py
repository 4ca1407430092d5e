"""Exception hierarchy shared by the whole engine."""


class ColorforgeError(Exception):
    """Base class for all engine errors."""


class ShapeError(ColorforgeError):
    """Structural mismatch: wrong dimensions, mismatched grading groups, bad arity."""


class SingularMapError(ColorforgeError):
    """A linear map that must be invertible is singular."""

    def __init__(self, label: str, message: str = ""):
        self.label = label or "<unnamed map>"
        super().__init__(message or f"map {self.label!r} is singular")


class ConflictingGeneratorsError(ColorforgeError):
    """Two generator entries of a skew tensor land in the same orbit."""

    def __init__(self, first, second, message: str = ""):
        self.first = first
        self.second = second
        super().__init__(
            message
            or f"generator entries {first} and {second} lie in the same "
            "skew-symmetry orbit"
        )


class PreconditionFailedError(ColorforgeError):
    """A constructor's hypothesis does not hold; carries the failing report."""

    def __init__(self, hypothesis: str, report=None):
        self.hypothesis = hypothesis
        self.report = report
        detail = ""
        if report is not None and hasattr(report, "failed_ids"):
            failed = report.failed_ids()
            if failed:
                detail = f" (failing axioms: {', '.join(failed)})"
        super().__init__(f"precondition violated: {hypothesis}{detail}")


class DimensionGuardError(PreconditionFailedError):
    """Exhaustive basis-tuple checks refuse spaces above the dimension guard."""

    def __init__(self, dim: int, limit: int):
        self.dim = dim
        self.limit = limit
        ColorforgeError.__init__(
            self,
            f"dimension {dim} exceeds the exhaustive-check guard ({limit}); "
            "set COLORFORGE_MAX_DIM to raise it",
        )
        self.hypothesis = "dimension guard"
        self.report = None


class EnumerationBudgetError(ColorforgeError):
    """A finite-grid enumeration would exceed its candidate budget."""


class DocumentError(ColorforgeError):
    """A presentation document cannot be parsed or validated."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
