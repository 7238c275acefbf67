# Copyright (c) 2026 insep developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
Utilities for insep

Tolerances, argument checking decorators and small array helpers shared by
all modules.
"""
import dataclasses
import functools
import logging
import math
import typing

import numpy as np

from . import exceptions

logger = logging.getLogger(__name__)

# Order of the min-entropy
INF: float = math.inf

# Margin for "satisfied"/"inside" decisions (violations must exceed it to count)
MARGIN: float = 1e-9

# |r|, |s| below this are considered zero (maximally disordered subsystems)
TSTATE_TOL: float = 1e-6


@dataclasses.dataclass(frozen=True)
class Tolerances:
    """Tolerances used when a matrix is accepted as a density matrix

    Attributes:
        herm (float): Max allowed ``|rho[i][j] - conj(rho[j][i])|``
        trace (float): Max allowed ``|Tr(rho) - 1|``
        psd (float): Max allowed magnitude of a negative eigenvalue
    """

    herm: float
    trace: float
    psd: float

    # Filled right after class creation
    INGEST: typing.ClassVar['Tolerances']
    INTERNAL: typing.ClassVar['Tolerances']


# Data read from outside may carry tomography noise; internal algebra is exact to rounding
Tolerances.INGEST = Tolerances(herm=1e-9, trace=1e-9, psd=1e-9)
Tolerances.INTERNAL = Tolerances(herm=1e-12, trace=1e-12, psd=1e-12)


def is_alpha(alpha: typing.Any) -> bool:
    """Returns True if alpha is an allowed entropy order (real >= 1, or infinity)"""
    try:
        value = float(alpha)
    except (TypeError, ValueError):
        return False
    return not math.isnan(value) and value >= 1.0


def ensure_alpha(func: typing.Callable) -> typing.Callable:
    """Ensures the ``alpha`` argument of the decorated function is a valid entropy order.

    The argument may be passed positionally (second position) or by keyword.

    Raises:
        exceptions.InvalidAlphaError: If alpha < 1 or not a number
    """

    @functools.wraps(func)
    def wrapper(*args: typing.Any, **kwargs: typing.Any) -> typing.Any:
        alpha = kwargs['alpha'] if 'alpha' in kwargs else (args[1] if len(args) > 1 else None)
        if not is_alpha(alpha):
            raise exceptions.InvalidAlphaError(f'Invalid alpha {alpha!r}: must be >= 1 or inf')
        return func(*args, **kwargs)

    return wrapper


def ensure_tstate(func: typing.Callable) -> typing.Callable:
    """Ensures the first argument (a density matrix) has maximally disordered subsystems.

    Raises:
        exceptions.NotTStateError: If ``|r|`` or ``|s|`` is above ``TSTATE_TOL``
    """

    @functools.wraps(func)
    def wrapper(rho: typing.Any, *args: typing.Any, **kwargs: typing.Any) -> typing.Any:
        if not rho.is_t_state():
            hs = rho.to_hs()
            raise exceptions.NotTStateError(
                f'State is not a T-state: |r|={np.linalg.norm(hs.r):.3g}, |s|={np.linalg.norm(hs.s):.3g}'
            )
        return func(rho, *args, **kwargs)

    return wrapper


# Decorator to cache result of a method or property on an specific instance attribute
def cache_on(attr: str) -> typing.Callable:
    """
    Decorator to cache result of a method on an specific instance attribute

    Only used on immutable objects, so the cache never needs invalidation.

    Args:
        attr (str): Attribute to cache on

    Returns:
        typing.Callable: Decorator
    """
    # prepend _ to attr to avoid conflicts
    attr = f'_{attr}'

    def decorator(func: typing.Callable) -> typing.Callable:
        @functools.wraps(func)
        def wrapper(self: typing.Any) -> typing.Any:
            if not hasattr(self, attr):
                object.__setattr__(self, attr, func(self))
            return getattr(self, attr)

        return wrapper

    return decorator


def frozen(array: typing.Any, dtype: typing.Any = float) -> np.ndarray:
    """Returns a read-only copy of array, converted to dtype"""
    result = np.array(array, dtype=dtype, copy=True)
    result.flags.writeable = False
    return result


def as_vector(value: typing.Any, size: int, name: str) -> np.ndarray:
    """Converts value into a real vector of the given size

    Raises:
        exceptions.OutOfRangeError: If the shape does not match or the values are not finite
    """
    try:
        vec = np.asarray(value, dtype=float).reshape(-1)
    except (TypeError, ValueError) as e:
        raise exceptions.OutOfRangeError(f'{name} must be a real {size}-vector: {e}') from e
    if vec.shape != (size,) or not np.all(np.isfinite(vec)):
        raise exceptions.OutOfRangeError(f'{name} must be a finite real {size}-vector, got {value!r}')
    return vec


def format_alpha(alpha: float) -> str:
    """Human/JSON friendly representation of an entropy order"""
    if math.isinf(alpha):
        return 'inf'
    return repr(float(alpha))
