"""Exception hierarchy for the energy-series package."""


class EnergySeriesError(Exception):
    """Base class for every error raised by this package."""


class NumericalFailure(EnergySeriesError):
    """A computation could not be completed to the requested accuracy."""


class InvalidPotential(EnergySeriesError, ValueError):
    pass


class NonDecayingSolution(NumericalFailure):
    pass


class TailToleranceUnmet(NumericalFailure):
    pass


class ProfileSingularity(NumericalFailure):
    pass


class NoPositiveCoefficients(NumericalFailure):
    pass


class InsufficientOrder(EnergySeriesError, ValueError):
    pass


class DegenerateSequence(NumericalFailure):
    pass


class TooShort(EnergySeriesError, ValueError):
    pass


class SingularPadeSystem(NumericalFailure):
    pass


class BrokenRegime(EnergySeriesError, ValueError):
    """PT-symmetric power below N=2, where the spectrum is not entirely real."""


class NoRealRoot(NumericalFailure):
    pass


class PoleProximity(NumericalFailure):
    pass


class NotConverged(NumericalFailure):
    pass


class NoBracket(NumericalFailure):
    pass
