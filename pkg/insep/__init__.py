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
"""Insep module.

Inseparability analysis of two-qubit mixed states: Hilbert-Schmidt
parameters, local frames, alpha-entropy inequalities, geometric and spectral
separability criteria and teleportation fidelity.

Example:
    >>> from insep import state, separability, entropy, teleport
    >>> rho = state.DensityMatrix.werner(0.5)
    >>> separability.classify(rho).verdict
    Verdict.INSEPARABLE
    >>> [v.satisfied for v in entropy.violation_scan(rho, [1, 2])]
    [True, True, False]
    >>> teleport.diagnostics(rho).useful
    True

:author: insep developers
"""
__version__ = '1.0.0'
__author__ = 'insep developers'
__license__ = 'MIT'
