"""
Bessel functions of the first and second kinds for real order.

Evaluation is delegated to :mod:`scipy.special` (ascending series for
small arguments, Hankel asymptotics and continued fractions for large
ones). This module owns the domain policy used by the rest of the
package: arguments must be strictly positive, overflow raises instead of
returning ``inf``, and orders within :data:`INTEGER_ORDER_TOL` of an
integer are routed to the integer-order routine for Y.

Scalars in give floats out; arrays in give arrays out.
"""

import logging
from typing import Tuple, Union

import numpy as np
from scipy import optimize, special

from central_susy.exceptions import DomainError, SpecialFunctionOverflow

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

INTEGER_ORDER_TOL: float = 1e-9
"""Orders closer than this to an integer use the integer-order formulas."""


def _as_output(value: np.ndarray, scalar: bool) -> ArrayLike:
    return float(value) if scalar else value


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not np.isfinite(nu):
        raise DomainError(f"Bessel order must be finite, got {nu}")
    return nu


def _check_argument(x: ArrayLike) -> Tuple[np.ndarray, bool]:
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("Bessel functions are evaluated only for x > 0")
    return x, scalar


def _check_finite(value: np.ndarray, name: str, nu: float, x: np.ndarray) -> None:
    bad = ~np.isfinite(value)
    if np.any(bad):
        where = np.atleast_1d(x)[np.atleast_1d(bad)][0]
        raise SpecialFunctionOverflow(f"{name}_{nu}(x) overflows at x={where:.6g}")


def is_integer_order(nu: float) -> bool:
    """True if ``nu`` is within :data:`INTEGER_ORDER_TOL` of an integer."""
    return abs(nu - round(nu)) < INTEGER_ORDER_TOL


def bessel_j(nu: float, x: ArrayLike) -> ArrayLike:
    """
    Bessel function of the first kind J_ν(x).

    Args:
      nu (float): real order
      x (Union[float, np.ndarray]): argument(s), strictly positive

    Output:
      J_ν(x), same shape as ``x``
    """
    nu = _check_order(nu)
    x, scalar = _check_argument(x)
    value = special.jv(nu, x)
    _check_finite(value, "J", nu, x)
    return _as_output(value, scalar)


def bessel_y(nu: float, x: ArrayLike) -> ArrayLike:
    """
    Bessel function of the second kind Y_ν(x).

    Non-integer orders use the general routine; orders within
    :data:`INTEGER_ORDER_TOL` of an integer use the integer-order limit
    formula, where the reflection formula is 0/0.

    Args:
      nu (float): real order
      x (Union[float, np.ndarray]): argument(s), strictly positive

    Output:
      Y_ν(x), same shape as ``x``
    """
    nu = _check_order(nu)
    x, scalar = _check_argument(x)
    if is_integer_order(nu):
        value = special.yn(int(round(nu)), x)
    else:
        value = special.yv(nu, x)
    _check_finite(value, "Y", nu, x)
    return _as_output(value, scalar)


def bessel_y_reflection(nu: float, x: ArrayLike) -> ArrayLike:
    """
    Y_ν(x) = (J_ν(x) cos νπ − J_{−ν}(x)) / sin νπ, valid for non-integer ν
    only. Used as an independent check of :func:`bessel_y`.
    """
    nu = _check_order(nu)
    if is_integer_order(nu):
        raise DomainError(f"the reflection formula needs a non-integer order, got {nu}")
    x, scalar = _check_argument(x)
    value = (special.jv(nu, x) * np.cos(nu * np.pi) - special.jv(-nu, x)) / np.sin(nu * np.pi)
    _check_finite(value, "Y", nu, x)
    return _as_output(value, scalar)


def bessel_pair_derivative(nu: float, x: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """
    Derivatives (J′_ν(x), Y′_ν(x)) from the recurrence
    C′_ν = C_{ν−1} − (ν/x) C_ν.

    Args:
      nu (float): real order
      x (Union[float, np.ndarray]): argument(s), strictly positive
    """
    nu = _check_order(nu)
    j = bessel_j(nu, x)
    y = bessel_y(nu, x)
    dj = bessel_j(nu - 1.0, x) - nu / np.asarray(x, dtype=float) * j
    dy = bessel_y(nu - 1.0, x) - nu / np.asarray(x, dtype=float) * y
    if np.ndim(x) == 0:
        return float(dj), float(dy)
    return dj, dy


def cylinder(nu: float, x: ArrayLike, C: float) -> ArrayLike:
    """The cylinder function J_ν(x) + C·Y_ν(x)."""
    if C == 0:
        return bessel_j(nu, x)
    return bessel_j(nu, x) + C * bessel_y(nu, x)


def cylinder_derivative(nu: float, x: ArrayLike, C: float) -> ArrayLike:
    """d/dx of :func:`cylinder`."""
    dj, dy = bessel_pair_derivative(nu, x)
    if C == 0:
        return dj
    return dj + C * dy


def cylinder_zeros(
    nu: float, C: float, a: float, b: float, step: float = 0.05
) -> np.ndarray:
    """
    All zeros of J_ν(x) + C·Y_ν(x) on [a, b]. Sign changes are bracketed
    on a scan of the interval and polished with Brent's method.

    Args:
      nu (float): real order
      C (float): weight of Y
      a (float): left end, > 0
      b (float): right end, > a
      step (float, optional): scan step; zeros closer than this may be missed

    Output:
      sorted array of zeros
    """
    if not 0 < a < b:
        raise DomainError(f"need 0 < a < b, got a={a}, b={b}")
    n = max(int(np.ceil((b - a) / step)), 2) + 1
    x = np.linspace(a, b, n)
    f = cylinder(nu, x, C)
    roots = list(x[f == 0.0])
    brackets = np.nonzero(f[:-1] * f[1:] < 0)[0]
    for i in brackets:
        roots.append(
            optimize.brentq(
                lambda t: cylinder(nu, t, C),
                x[i],
                x[i + 1],
                xtol=1e-15,
                rtol=4 * np.finfo(float).eps,
            )
        )
    logger.debug("nu=%g C=%g: %d zeros on [%g, %g]", nu, C, len(roots), a, b)
    return np.array(sorted(roots))


def identity_residuals(nu: float, x: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """
    Residuals of two identities every implementation must satisfy:

    * Wronskian J_ν Y_{ν+1} − J_{ν+1} Y_ν + 2/(πx) (absolute)
    * recurrence J_{ν−1} + J_{ν+1} − (2ν/x) J_ν, relative to |J_ν|

    Output:
      (wronskian residual, recurrence residual)
    """
    x_arr = np.asarray(x, dtype=float)
    j0, j1 = bessel_j(nu, x), bessel_j(nu + 1.0, x)
    y0, y1 = bessel_y(nu, x), bessel_y(nu + 1.0, x)
    wronskian = j0 * y1 - j1 * y0 + 2.0 / (np.pi * x_arr)
    recurrence = (bessel_j(nu - 1.0, x) + j1 - 2.0 * nu / x_arr * j0) / np.abs(j0)
    return wronskian, recurrence
