"""Exception hierarchy shared by every bellforge module."""


class BellForgeError(Exception):
    """Base class for all bellforge errors."""


class NotHermitian(BellForgeError, ValueError):
    pass


class NoConvergence(BellForgeError, ArithmeticError):
    pass


class DimensionMismatch(BellForgeError, ValueError):
    pass


class NonUnitVector(BellForgeError, ValueError):
    pass


class ScenarioMismatch(BellForgeError, ValueError):
    pass


class ScenarioTooLarge(BellForgeError, ValueError):
    pass


class MalformedTable(BellForgeError, ValueError):
    pass


class ZeroVector(BellForgeError, ValueError):
    pass


class NonCommutingSeed(BellForgeError, ValueError):
    pass


class IncompletePairing(BellForgeError, ValueError):
    pass


class VerificationFailed(BellForgeError, ArithmeticError):
    """Forged polynomial does not reassemble into its seed operator."""


class MalformedInterval(BellForgeError, ValueError):
    pass
