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
@author: insep developers
"""
from insep import exceptions

from tests.util import inseptest


class TestExceptions(inseptest.InsepTestCase):
    def test_hierarchy(self) -> None:
        for cls in (
            exceptions.InvalidStateError,
            exceptions.InvalidSpectrumError,
            exceptions.OutOfRangeError,
            exceptions.NonUnitDirectionError,
            exceptions.NotUnitaryError,
            exceptions.NotProperRotationError,
            exceptions.ConvergenceError,
            exceptions.InvalidAlphaError,
            exceptions.NotTStateError,
            exceptions.InvalidCountError,
            exceptions.CriterionMismatchError,
            exceptions.SchemaError,
        ):
            self.assertTrue(issubclass(cls, exceptions.InsepException), cls)
        for cls in (exceptions.NotHermitianError, exceptions.TraceNotOneError, exceptions.NotPositiveError):
            self.assertTrue(issubclass(cls, exceptions.InvalidStateError), cls)

    def test_invalid_state(self) -> None:
        error = exceptions.TraceNotOneError('trace is 2', 1.0)
        self.assertEqual(error.invariant, 'TraceNotOne')
        self.assertEqual(error.magnitude, 1.0)
        self.assertEqual(str(error), 'trace is 2')
        self.assertEqual(exceptions.InvalidStateError('bad').magnitude, 0.0)

    def test_schema_error(self) -> None:
        error = exceptions.SchemaError([('/werner/p', 'missing'), ('', 'expected an object')])
        self.assertEqual(error.errors(), [('/werner/p', 'missing'), ('', 'expected an object')])
        self.assertEqual(str(error), '/werner/p: missing; /: expected an object')
        with self.assertRaises(exceptions.InsepException):
            raise error
