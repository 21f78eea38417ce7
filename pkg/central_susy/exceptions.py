"""
Errors raised by the package. Everything derives from
:class:`CentralSusyError` so callers can catch the whole family at once.
"""

from typing import Optional


class CentralSusyError(Exception):
    """Base class for all errors raised by ``central_susy``."""


class ConfigurationError(CentralSusyError, ValueError):
    """Invalid configuration, grid, tolerance or family parameter."""


class DomainError(CentralSusyError, ValueError):
    """An argument lies outside the domain of the function."""


class RegimeError(CentralSusyError):
    """The parameters fall in a regime where the formula does not apply."""


class SpecialFunctionOverflow(CentralSusyError, ArithmeticError):
    """A Bessel function overflowed for the requested order/argument."""


class PoleError(CentralSusyError):
    """
    The central superpotential has a pole.

    Args:
      radius (float): radius at which the denominator vanishes
    """

    def __init__(self, radius: float, message: Optional[str] = None):
        self.radius = float(radius)
        super().__init__(message or f"superpotential pole at r={self.radius:.17g}")


class NormalizationError(CentralSusyError):
    """
    The ground state cannot be normalized.

    Args:
      message (str): explanation
      status (optional): the :class:`~central_susy.wavefunction.SusyStatus`
        behind the refusal, if any
    """

    def __init__(self, message: str, status=None):
        self.status = status
        super().__init__(message)


class GridTooCoarseError(CentralSusyError):
    """Step halving does not reduce the Schrödinger residual."""
