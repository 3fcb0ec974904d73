"""Exception types shared across the package."""


class AspectScoreError(Exception):
    """Base class for every error raised by aspectscore."""


class ParseError(AspectScoreError, ValueError):
    def __init__(self, lineno: int, reason: str, source: str = ""):
        self.lineno = lineno
        self.reason = reason
        self.source = source
        where = f"{source}:" if source else "line "
        super().__init__(f"{where}{lineno}: {reason}")


class ValidationError(AspectScoreError, ValueError):
    """Raised when a loaded structure breaks one or more invariants.

    ``violations`` holds every problem found, not just the first.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NoOpinionTerms(AspectScoreError, ValueError):
    def __init__(self):
        super().__init__("no opinion terms")


class NoScorableRemarks(AspectScoreError, ValueError):
    def __init__(self):
        super().__init__("no scorable remarks")


class StoreError(AspectScoreError):
    pass
