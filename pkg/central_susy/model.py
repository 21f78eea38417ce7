"""
Abstract class for all parameterized objects (families and parameter maps).
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional


class Model(ABC):
    """
    Abstract class for a model, which has methods to keep track of its
    parameters.

    Parameters of the model **must be attributes** that match the name
    provided in the :meth:`parameter_names` property.
    """

    prefix: Optional[str] = None
    """A prefix to prepend to parameter names when reporting them."""

    @property
    @abstractmethod
    def parameter_names(self) -> List[str]:
        """
        Names of the parameters for **this** object. This method **must**
        be implemented for all subclasses, and the names must consist of the
        names of the attributes that contain the parameters.

        Example:

        .. code-block:: python

           class MyModel(Model):
               omega = 1.0

               @property
               def parameter_names(self):
                   return ["omega"]

        Returns:
          names of parameters for **this** object
        """
        raise NotImplementedError  # pragma: no cover

    @property
    def parameters(self) -> Dict[str, Any]:
        """
        The parameters for **this** object. The parameters **must** be
        attributes of the object.

        Returns:
          name/value pairs where values can be numbers or parameter maps
        """
        return {name: getattr(self, name) for name in self.parameter_names}

    @property
    def prefixed_parameters(self) -> Dict[str, Any]:
        """
        The parameters keyed with :attr:`prefix` prepended, as they appear
        in reports.
        """
        prefix = self.prefix or ""
        return {prefix + key: value for key, value in self.parameters.items()}

    def replace(self, **changes: Any) -> "Model":
        """
        Returns a copy of this model with some parameters changed. The
        original object is left untouched.

        Args:
          changes: new values keyed by parameter name
        """
        unknown = set(changes) - set(self.parameter_names)
        if unknown:
            raise KeyError(f"unknown parameters {sorted(unknown)}")
        params = {**self.parameters, **changes}
        return type(self)(**params)

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.parameters.items())
        return f"{type(self).__name__}({args})"
