"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class UnruhEntanglementError(Exception):
    exit_code = 1


class ConfigError(UnruhEntanglementError, ValueError):
    exit_code = 2


class DomainError(UnruhEntanglementError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    exit_code = 2


class HorizonError(DomainError):
    """Event lies on a Rindler horizon (|t| == |x|) where no sector is defined."""


class SectorMismatchError(DomainError):
    pass


class NumericalContractError(UnruhEntanglementError, ArithmeticError):
    exit_code = 3


class ConvergenceError(NumericalContractError):
    pass


class NonHermitianError(NumericalContractError):
    pass


class PSDViolationError(NumericalContractError):
    pass


class UnsupportedFamilyError(UnruhEntanglementError, ValueError):
    exit_code = 2
