"""Exception hierarchy shared by every module of the package."""


class SubjoinError(Exception):
    """Base class for all package errors."""


class InvalidGraph(SubjoinError, ValueError):
    """Malformed graph data or invalid generator parameters."""


class NonRegular(SubjoinError, ValueError):
    """A closed form was asked for a graph that is not regular."""


class NonSymmetric(SubjoinError, ValueError):
    pass


class NearSingular(SubjoinError, ArithmeticError):
    """Evaluation point too close to a pole of a coronal."""


class InexactDivision(SubjoinError, ArithmeticError):
    """Polynomial division left a non-negligible remainder."""


class ComplexRootsUnexpected(SubjoinError, ArithmeticError):
    """A factor that must be real-rooted produced a genuinely complex root."""


class Disconnected(SubjoinError, ValueError):
    pass


class HypothesisViolated(SubjoinError, ValueError):
    """Inputs do not satisfy the hypotheses of the requested cospectral construction."""


class SpectraDiffer(SubjoinError, ArithmeticError):
    pass


class TooLarge(SubjoinError, ValueError):
    pass
