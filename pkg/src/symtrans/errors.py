"""Exception types raised across the package."""


class SymTransError(Exception):
    """Base class for all numeric/domain failures."""


class DimensionMismatch(SymTransError, ValueError):
    pass


class NotSquare(SymTransError, ValueError):
    pass


class NotHermitian(SymTransError, ValueError):
    pass


class NotPSD(SymTransError, ValueError):
    pass


class NotGram(SymTransError, ValueError):
    pass


class InvalidSpectrum(SymTransError, ValueError):
    pass


class Empty(SymTransError, ValueError):
    pass


class OddN(SymTransError, ValueError):
    pass


class AmplitudeOutOfRange(SymTransError, ValueError):
    pass


class DegenerateFailure(SymTransError, ValueError):
    """The failure probability is (numerically) one, so no leak exists."""


class DimensionTooLarge(SymTransError, ValueError):
    pass


class SplitTooCoarse(SymTransError, ValueError):
    pass


class CutoffTooSmall(SymTransError, ValueError):
    pass


class TooLarge(SymTransError, ValueError):
    pass
