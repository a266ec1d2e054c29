"""Exception types raised by the library."""


class BesselRadiiError(Exception):
    """Base class for every computation error raised by this package."""


class BracketInvalid(BesselRadiiError):
    pass


class NoConvergence(BesselRadiiError):
    pass


class OrderOutOfRange(BesselRadiiError):
    pass


class RatioNotSmall(BesselRadiiError):
    pass


class ConvergenceDomain(BesselRadiiError):
    pass


class NegativeArgument(BesselRadiiError):
    pass


class ExactDivisionByZero(BesselRadiiError, ZeroDivisionError):
    pass
