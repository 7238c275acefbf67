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
import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from insep import entropy, frame, linalg, separability, teleport
from insep.state import DensityMatrix, SIGMA
from insep.util import INF

from tests.util import inseptest

spectra = (
    arrays(np.float64, (4,), elements=st.floats(min_value=0.0, max_value=1.0))
    .filter(lambda v: v.sum() > 1e-3)
    .map(lambda v: v / v.sum())
)
unit_vectors = (
    arrays(np.float64, (3,), elements=st.floats(min_value=-1.0, max_value=1.0))
    .filter(lambda v: np.linalg.norm(v) > 1e-2)
    .map(lambda v: v / np.linalg.norm(v))
)
angles = st.floats(min_value=-np.pi, max_value=np.pi)
small_matrices = arrays(np.float64, (3, 3), elements=st.floats(min_value=-1.0, max_value=1.0))


class TestProperties(inseptest.InsepTestCase):
    @settings(max_examples=200, deadline=None)
    @given(p=spectra)
    def test_t_state_criteria(self, p: np.ndarray) -> None:
        assume(abs(np.max(p) - 0.5) > 1e-6)
        rho = DensityMatrix.bell_diagonal(p)
        report = separability.classify(rho)
        separable = np.max(p) <= 0.5
        self.assertEqual(report.in_octahedron, separable)
        self.assertEqual(separability.spectral_separable(rho), separable)
        self.assertEqual(bool(np.min(report.flip_overlaps) >= 0), separable)
        self.assertEqual(teleport.diagnostics(rho).useful, not separable)
        self.assertEqual(entropy.tstate_inequality(p, INF), separable)

    @settings(max_examples=100, deadline=None)
    @given(p=spectra)
    def test_renyi_nonincreasing(self, p: np.ndarray) -> None:
        values = [entropy.renyi_of_spectrum(p, alpha) for alpha in (1, 1.5, 2, 4, 20, INF)]
        for higher, lower in zip(values, values[1:]):
            self.assertGreaterEqual(higher, lower - 1e-10)
        self.assertLessEqual(values[0], np.log(4) + 1e-12)
        self.assertGreaterEqual(values[-1], -1e-12)

    @settings(max_examples=100, deadline=None)
    @given(axis=unit_vectors, angle=angles)
    def test_rotation_roundtrip(self, axis: np.ndarray, angle: float) -> None:
        rotation = frame.ProperRotation.about_axis(axis, angle)
        self.assertEqual(frame.rotation_from_unitary(frame.unitary_from_rotation(rotation)), rotation)

    @settings(max_examples=100, deadline=None)
    @given(matrix=small_matrices)
    def test_svd3(self, matrix: np.ndarray) -> None:
        u, sigma, v = linalg.svd3(matrix)
        self.assertArrayClose(u @ np.diag(sigma) @ v.T, matrix, 1e-10)
        self.assertArrayClose(u.T @ u, np.eye(3), 1e-10)
        self.assertArrayClose(v.T @ v, np.eye(3), 1e-10)
        self.assertTrue(np.all(np.diff(sigma) <= 0))

    @settings(max_examples=100, deadline=None)
    @given(first=unit_vectors, second=unit_vectors, weight=st.floats(min_value=0.0, max_value=1.0))
    def test_product_states(self, first: np.ndarray, second: np.ndarray, weight: float) -> None:
        a = (np.eye(2) + weight * np.einsum('n,nij->ij', first, SIGMA)) / 2
        b = (np.eye(2) + np.einsum('n,nij->ij', second, SIGMA)) / 2
        rho = DensityMatrix.product(a, b)
        hs = rho.to_hs()
        self.assertArrayClose(hs.t, weight * np.outer(first, second), 1e-10)
        self.assertLessEqual(teleport.n_value(rho), 1 + 1e-9)
        self.assertGreaterEqual(float(np.min(separability.flip_overlaps(rho))), -1e-10)
        self.assertEqual(DensityMatrix.from_hs(hs), rho)
