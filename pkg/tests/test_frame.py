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
import math

import numpy as np

from insep import entropy, exceptions, frame, sampling, teleport
from insep.state import DensityMatrix, BellBasis, PAULI
from insep.util import INF

from tests.util import inseptest


class TestFrame(inseptest.InsepTestCase):
    def test_exp_pauli_rotation(self) -> None:
        for axis in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, -2]):
            for angle in (0.3, math.pi / 2, 2.5):
                rotation = frame.rotation_from_unitary(frame.LocalUnitary.exp_pauli(axis, angle))
                self.assertEqual(rotation, frame.ProperRotation.about_axis(axis, angle))

    def test_rotation_roundtrip(self) -> None:
        gen = self.generator()
        for _ in range(50):
            u = sampling.random_local_unitary(gen)
            o = u.rotation()
            back = frame.unitary_from_rotation(o)
            # Same unitary up to a global phase
            self.assertClose(abs(np.trace(back.matrix.conj().T @ u.matrix)), 2.0, 1e-10)
            self.assertEqual(back.rotation(), o)
            self.assertClose(np.linalg.det(back.matrix).real, 1.0, 1e-10)

    def test_rotation_half_turn(self) -> None:
        o = frame.ProperRotation(np.diag([-1.0, -1.0, 1.0]))
        u = o.unitary()
        self.assertEqual(u.rotation(), o)
        self.assertArrayClose(u.matrix, [[-1j, 0], [0, 1j]], 1e-12)

    def test_pauli_x_rotation(self) -> None:
        o = frame.rotation_from_unitary(frame.LocalUnitary(PAULI[1]))
        self.assertEqual(o, frame.ProperRotation(np.diag([1.0, -1.0, -1.0])))
        self.assertArrayClose(o.matrix, np.diag([1.0, -1.0, -1.0]), 1e-12)
        self.assertEqual(frame.unitary_from_rotation(o).rotation(), o)

    def test_local_invariants(self) -> None:
        gen = self.generator(13)
        for _ in range(1000):
            rho = sampling.random_density(gen)
            moved = frame.apply_local(rho, sampling.random_local_unitary(gen), sampling.random_local_unitary(gen))
            self.assertArrayClose(moved.spectrum(), rho.spectrum(), 1e-9)
            self.assertClose(teleport.n_value(moved), teleport.n_value(rho), 1e-9)
            for alpha in (1, 2, INF):
                self.assertClose(entropy.renyi(moved, alpha), entropy.renyi(rho, alpha), 1e-9)
                for which in (1, 2):
                    self.assertClose(
                        entropy.conditional(moved, alpha, which), entropy.conditional(rho, alpha, which), 1e-9
                    )

    def test_invalid_rotations(self) -> None:
        with self.assertRaises(exceptions.NotProperRotationError):
            frame.ProperRotation(np.diag([1.0, 1.0, -1.0]))
        with self.assertRaises(exceptions.NotProperRotationError):
            frame.ProperRotation(2 * np.eye(3))
        with self.assertRaises(exceptions.NotProperRotationError):
            frame.ProperRotation(np.eye(2))
        with self.assertRaises(exceptions.NotUnitaryError):
            frame.LocalUnitary([[1, 1], [0, 1]])

    def test_apply_local_transforms_parameters(self) -> None:
        gen = self.generator()
        for _ in range(20):
            rho = sampling.random_density(gen)
            u1, u2 = sampling.random_local_unitary(gen), sampling.random_local_unitary(gen)
            o1, o2 = u1.rotation().matrix, u2.rotation().matrix
            before, after = rho.to_hs(), frame.apply_local(rho, u1, u2).to_hs()
            self.assertArrayClose(after.r, o1 @ before.r, 1e-10)
            self.assertArrayClose(after.s, o2 @ before.s, 1e-10)
            self.assertArrayClose(after.t, o1 @ before.t @ o2.T, 1e-10)

    def test_canonicalize(self) -> None:
        gen = self.generator()
        for _ in range(30):
            rho = sampling.random_density(gen)
            canonical = frame.canonicalize(rho)
            t = rho.to_hs().t
            self.assertClose(np.linalg.det(canonical.o1.matrix), 1.0, 1e-10)
            self.assertClose(np.linalg.det(canonical.o2.matrix), 1.0, 1e-10)
            self.assertArrayClose(
                canonical.o1.matrix @ t @ canonical.o2.matrix.T, np.diag(canonical.diag), 1e-10
            )
            self.assertArrayClose(canonical.state.to_hs().t, np.diag(canonical.diag), 1e-9)
            magnitudes = np.abs(canonical.diag)
            self.assertTrue(np.all(np.diff(magnitudes) <= 1e-12))
            # Sign of det T lands on the smallest entry
            self.assertGreaterEqual(canonical.diag[0], 0)
            self.assertGreaterEqual(canonical.diag[1], 0)
            self.assertEqual(np.sign(canonical.diag[2]), np.sign(np.linalg.det(t)))
            self.assertArrayClose(canonical.state.spectrum(), rho.spectrum(), 1e-10)
            self.assertArrayClose(canonical.state.to_hs().r, canonical.o1.matrix @ rho.to_hs().r, 1e-10)

    def test_canonical_werner(self) -> None:
        canonical = frame.canonicalize(DensityMatrix.werner(0.5))
        self.assertArrayClose(canonical.diag, [0.5, 0.5, -0.5], 1e-12)
        singlet = frame.canonicalize(BellBasis.projector(0))
        self.assertArrayClose(singlet.diag, [1.0, 1.0, -1.0], 1e-12)
        mixed = frame.canonicalize(DensityMatrix.maximally_mixed())
        self.assertArrayClose(mixed.diag, [0.0, 0.0, 0.0], 0)
        self.assertEqual(mixed.o1, frame.ProperRotation.identity())

    def test_canonical_is_local_invariant(self) -> None:
        gen = self.generator(7)
        for _ in range(20):
            rho = sampling.random_density(gen)
            moved = frame.apply_local(rho, sampling.random_local_unitary(gen), sampling.random_local_unitary(gen))
            self.assertArrayClose(frame.canonicalize(moved).diag, frame.canonicalize(rho).diag, 1e-9)

    def test_canonical_unitaries(self) -> None:
        rho = sampling.random_density(self.generator(3))
        canonical = frame.canonicalize(rho)
        again = frame.apply_local(rho, canonical.u1, canonical.u2)
        self.assertEqual(again, canonical.state)
