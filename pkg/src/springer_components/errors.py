"""Exception hierarchy.

Everything raised on bad input derives from :class:`InvalidInput`; the CLI maps
that family to exit code 2 and :class:`Infeasible` to exit code 3.
"""


class SpringerError(Exception):
    pass


class InvalidInput(SpringerError, ValueError):
    pass


class NotClassicalType(InvalidInput):
    """Multiplicity parity constraint of the requested Lie type fails."""


class DimensionMismatch(InvalidInput):
    pass


class UnclassifiableDomino(InvalidInput):
    """Domino is none of N, I+, I- (the tableau is not admissible)."""


class NotAdmissible(InvalidInput):
    pass


class NotAPartition(InvalidInput):
    """Blocks are not disjoint or do not cover the base set."""


class PatternMismatch(InvalidInput):
    pass


class ScopeError(InvalidInput):
    pass


class SolveError(InvalidInput):
    pass


class SingularTable(SolveError):
    pass


class InconsistentCharacter(SolveError):
    """Overdetermined system has no solution."""


class NonIntegralSolution(SolveError):
    pass


class NegativeMultiplicity(SolveError):
    pass


class Infeasible(SpringerError, RuntimeError):
    """Enumeration would exceed the configured budget."""
