"""Exception hierarchy shared by all modules."""


class SeytightError(Exception):
    """Base class for all library errors."""


class InputError(SeytightError, ValueError):
    """Malformed or out-of-range input (bad vertex, bad file, bad parameter)."""


class ValidationError(SeytightError, ValueError):
    """A documented precondition of a construction was violated."""


class SizeCapError(SeytightError):
    """A search or enumeration was refused because it exceeds its size cap.

    Maps to CLI exit code 2.
    """


class TheoremViolationError(SeytightError):
    """The abelian Cayley classification failed on a valid instance.

    This outcome would falsify the classification the decomposition search
    implements, so it is raised loudly and must never be swallowed.
    """

    def __init__(self, group, connection_set, detail=""):
        self.group = group
        self.connection_set = connection_set
        msg = (
            "THEOREM-VIOLATION: no decomposition found for Cayley digraph of "
            f"{group} with connection set {sorted(connection_set)}"
        )
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
