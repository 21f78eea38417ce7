"""
Parameter maps ℓ ↦ value. Family parameters such as G(ℓ), R_ℓ or k_{0ℓ}
may depend on the angular momentum; these small models hold that
dependence. Plain numbers are promoted with :func:`as_ell_map`.
"""

from numbers import Number
from typing import Dict, List, Mapping, Union

import numpy as np

from central_susy.exceptions import ConfigurationError
from central_susy.model import Model


class EllMap(Model):
    """
    Abstract class for a map from angular momentum to a real parameter.
    Subclasses implement :meth:`eval`.
    """

    def eval(self, ell: float) -> float:
        raise NotImplementedError  # pragma: no cover

    def __call__(self, ell: float) -> float:
        return self.eval(ell)


class ConstantMap(EllMap):
    """
    A parameter that does not depend on ℓ.

    Args:
      constant (float): value returned for every ℓ
    """

    def __init__(self, constant: float):
        self.constant = float(constant)

    @property
    def parameter_names(self) -> List[str]:
        """Returns ``["constant"]``"""
        return ["constant"]

    def eval(self, ell: float) -> float:
        """Returns the value of :attr:`constant`."""
        return self.constant

    def __eq__(self, other) -> bool:
        return isinstance(other, ConstantMap) and other.constant == self.constant

    def __hash__(self) -> int:
        return hash(("ConstantMap", self.constant))


class TabulatedMap(EllMap):
    """
    A parameter given as an explicit table. Looking up an ℓ that is not
    tabulated is an error rather than an extrapolation.

    Args:
      values (Mapping[float, float]): ℓ -> value
    """

    def __init__(self, values: Mapping[float, float]):
        if not values:
            raise ConfigurationError("a tabulated map needs at least one entry")
        self.values: Dict[float, float] = {float(k): float(v) for k, v in values.items()}

    @property
    def parameter_names(self) -> List[str]:
        return ["values"]

    def eval(self, ell: float) -> float:
        try:
            return self.values[float(ell)]
        except KeyError:
            raise ConfigurationError(
                f"no tabulated value for ell={ell}; known: {sorted(self.values)}"
            ) from None


def as_ell_map(value: Union[Number, Mapping[float, float], EllMap]) -> EllMap:
    """
    Promote a number or a dict to an :class:`EllMap`.

    Args:
      value: a number, a dict ℓ -> value, or an existing map
    """
    if isinstance(value, EllMap):
        return value
    if isinstance(value, Mapping):
        return TabulatedMap(value)
    if isinstance(value, (Number, np.number)):
        return ConstantMap(float(value))
    raise ConfigurationError(f"cannot use {value!r} as a parameter map")
