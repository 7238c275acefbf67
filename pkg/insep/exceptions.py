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
Insep exceptions

This module contains all the exceptions that can be raised by insep.

Note:
    Every exception derives from :class:`InsepException`, so callers that do not
    care about the exact failure can catch that one.
"""
import typing


class InsepException(Exception):
    """Base exception for insep module

    Args:
        message (str): Message to show
    """

    pass


class InvalidStateError(InsepException):
    """Operator is not a valid density matrix

    Args:
        message (str): Message to show
        magnitude (float): Size of the violation (how far from the invariant the operator is)
    """

    magnitude: float

    def __init__(self, message: str, magnitude: float = 0.0) -> None:
        super().__init__(message)
        self.magnitude = magnitude

    @property
    def invariant(self) -> str:
        """Name of the violated invariant (class name without ``Error``)"""
        return self.__class__.__name__[: -len('Error')]


class NotHermitianError(InvalidStateError):
    """Operator is not Hermitian"""

    pass


class TraceNotOneError(InvalidStateError):
    """Operator trace is not one"""

    pass


class NotPositiveError(InvalidStateError):
    """Operator has a negative eigenvalue"""

    pass


class InvalidSpectrumError(InsepException):
    """Probability vector is not a valid Bell spectrum"""

    pass


class OutOfRangeError(InsepException):
    """Parameter outside of its allowed range"""

    pass


class NonUnitDirectionError(InsepException):
    """Measurement direction is not a unit vector"""

    pass


class NotUnitaryError(InsepException):
    """Matrix is not unitary"""

    pass


class NotProperRotationError(InsepException):
    """Matrix is not a proper rotation (orthogonal with det = +1)"""

    pass


class ConvergenceError(InsepException):
    """Iterative solver exceeded its sweep budget"""

    pass


class InvalidAlphaError(InsepException):
    """Entropy order alpha is not allowed (must be >= 1 or infinity)"""

    pass


class NotTStateError(InsepException):
    """Operation requires maximally disordered subsystems (r = s = 0)"""

    pass


class InvalidCountError(InsepException):
    """Count argument must be a positive integer"""

    pass


class CriterionMismatchError(InsepException):
    """Two criteria that must agree gave different answers"""

    pass


class SchemaError(InsepException):
    """Input document does not follow the state schema

    Args:
        errors (list): List of ``(json_pointer, message)`` problems

    """

    def __init__(self, errors: typing.List[typing.Tuple[str, str]]) -> None:
        super().__init__(*errors)

    def errors(self) -> typing.List[typing.Tuple[str, str]]:
        """Returns the list of errors

        Returns:
            typing.List[typing.Tuple[str, str]]: List of ``(json_pointer, message)``
        """
        return typing.cast(typing.List[typing.Tuple[str, str]], list(self.args))

    def __str__(self) -> str:
        return '; '.join(f'{pointer or "/"}: {message}' for pointer, message in self.errors())
