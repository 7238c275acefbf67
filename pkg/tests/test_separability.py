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

from insep import exceptions, frame, sampling, separability, teleport
from insep.separability import Verdict
from insep.state import DensityMatrix, BellBasis, PAULI

from tests.util import inseptest


class TestSeparability(inseptest.InsepTestCase):
    def test_tetrahedron_and_octahedron(self) -> None:
        for vertex in BellBasis.VERTICES:
            self.assertTrue(separability.in_tetrahedron(vertex))
            self.assertFalse(separability.in_octahedron(vertex))
            self.assertFalse(separability.in_tetrahedron(-vertex))
        for point in ([0, 0, 0], [1, 0, 0], [0, -1, 0], [1 / 3, 1 / 3, 1 / 3], [0.5, -0.5, 0]):
            self.assertTrue(separability.in_octahedron(point))
            self.assertTrue(separability.in_tetrahedron(point))
        self.assertFalse(separability.in_octahedron([0.5, 0.5, 0.1]))
        self.assertArrayClose(separability.tetrahedron_slack([0, 0, 0]), [1, 1, 1, 1], 0)
        with self.assertRaises(exceptions.OutOfRangeError):
            separability.in_octahedron([1, 2])

    def test_tvector(self) -> None:
        t = separability.TVector.of(DensityMatrix.werner(0.5))
        self.assertArrayClose(t.t, [0.5, 0.5, -0.5], 1e-12)
        self.assertClose(t.l1_norm, 1.5, 1e-12)
        self.assertFalse(separability.in_octahedron(t))
        with self.assertRaises(exceptions.OutOfRangeError):
            separability.TVector([1.5, 0, 0])

    def test_flip_operator(self) -> None:
        swap = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        self.assertArrayClose(separability.flip_operator(0), swap, 1e-15)
        for i in range(4):
            v = separability.flip_operator(i)
            self.assertArrayClose(v @ v, np.eye(4), 1e-15)
            self.assertArrayClose(v, v.conj().T, 1e-15)
        with self.assertRaises(exceptions.OutOfRangeError):
            separability.flip_operator(4)

    def test_flip_overlaps(self) -> None:
        self.assertArrayClose(separability.flip_overlaps(BellBasis.projector(0)), [-1, 1, 1, 1], 1e-12)
        self.assertArrayClose(separability.flip_overlaps(DensityMatrix.maximally_mixed()), [0.5] * 4, 1e-12)
        gen = self.generator()
        # The closed form holds for any state, with t the diagonal of T
        for _ in range(20):
            rho = sampling.random_density(gen)
            self.assertArrayClose(
                separability.flip_overlaps(rho),
                separability.flip_overlaps_from_t(np.diag(rho.to_hs().t)),
                1e-12,
            )

    def test_separable_states_have_nonnegative_flips(self) -> None:
        gen = self.generator()
        for _ in range(100):
            rho = sampling.random_product_mixture(gen, 3)
            self.assertGreaterEqual(np.min(separability.flip_overlaps(rho)), -1e-12)

    def test_spectral_criterion(self) -> None:
        self.assertTrue(separability.spectral_separable(DensityMatrix.bell_diagonal([0.5, 0.5, 0, 0])))
        self.assertTrue(separability.spectral_separable(DensityMatrix.maximally_mixed()))
        self.assertFalse(separability.spectral_separable(DensityMatrix.werner(0.4)))
        zero = np.diag([1.0, 0.0])
        with self.assertRaises(exceptions.NotTStateError):
            separability.spectral_separable(DensityMatrix.product(zero, zero))

    def test_werner_classification(self) -> None:
        for p, rho in self.werner_states():
            report = separability.classify(rho)
            self.assertTrue(report.is_t_state)
            self.assertClose(report.l1_norm, 3 * p, 1e-10)
            expected = Verdict.SEPARABLE if p <= 1 / 3 else Verdict.INSEPARABLE
            self.assertEqual(report.verdict, expected)
            separability.check_consistency(report, teleport.diagnostics(rho))

    def test_edge_states(self) -> None:
        for axis in (1, 2, 3):
            for sign in (1, -1):
                report = separability.classify(DensityMatrix.edge_state(axis, sign))
                self.assertEqual(report.verdict, Verdict.SEPARABLE)
                self.assertClose(report.l1_norm, 1.0, 1e-12)
                self.assertClose(report.max_eigenvalue, 0.5, 1e-10)

    def test_bell_vertices_are_inseparable(self) -> None:
        for projector in BellBasis.projectors():
            report = separability.classify(projector)
            self.assertEqual(report.verdict, Verdict.INSEPARABLE)
            self.assertClose(report.l1_norm, 3.0, 1e-10)
            self.assertClose(np.min(report.flip_overlaps), -1.0, 1e-10)

    def test_pure_product(self) -> None:
        zero = np.diag([1.0, 0.0])
        plus = np.full((2, 2), 0.5)
        rho = DensityMatrix.product(zero, plus)
        self.assertTrue(separability.is_pure_product(rho))
        report = separability.classify(rho)
        self.assertFalse(report.is_t_state)
        self.assertEqual(report.verdict, Verdict.SEPARABLE)

    def test_entangled_general_state(self) -> None:
        theta = math.pi / 8
        vec = np.array([math.cos(theta), 0, 0, math.sin(theta)])
        report = separability.classify(DensityMatrix(np.outer(vec, vec)))
        self.assertFalse(report.is_t_state)
        self.assertEqual(report.verdict, Verdict.INSEPARABLE)
        self.assertIn('entropy_alpha_1', report.violations)
        self.assertIn('flip_overlap', report.violations)

    def test_product_mixtures_are_inconclusive(self) -> None:
        gen = self.generator()
        for _ in range(50):
            report = separability.classify(sampling.random_product_mixture(gen, 3))
            self.assertFalse(report.is_t_state)
            self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
            self.assertEqual(report.violations, ())
        # Product of two mixed qubits: separable, but no criterion here can prove it
        rho = DensityMatrix.product(np.diag([0.75, 0.25]), np.diag([0.75, 0.25]))
        report = separability.classify(rho)
        self.assertFalse(separability.is_pure_product(rho))
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
        self.assertClose(report.l1_norm, 0.25, 1e-12)
        self.assertEqual(report.as_dict()['verdict'], 'INCONCLUSIVE')

    def test_near_t_states(self) -> None:
        # |r| and |s| below the T-state tolerance do not move the T-state criteria
        boundary = DensityMatrix.from_matrix(np.diag([0.0, 0.5 + 2e-7, 0.5 - 2e-7, 0.0]))
        self.assertTrue(boundary.is_t_state())
        self.assertGreater(float(boundary.spectrum()[0]), 0.5 + 1e-7)
        self.assertTrue(separability.spectral_separable(boundary))
        report = separability.classify(boundary)
        self.assertEqual(report.verdict, Verdict.SEPARABLE)
        self.assertClose(report.max_eigenvalue, 0.5, 1e-12)
        tel = teleport.diagnostics(boundary)
        self.assertFalse(tel.purifiable)
        separability.check_consistency(report, tel)

        shift = 1e-7 * np.kron(PAULI[3], PAULI[0]) / 4
        for p, werner in self.werner_states():
            if p == 1.0:
                continue  # pure, the shift would make it indefinite
            rho = DensityMatrix.from_matrix(werner.matrix + shift)
            self.assertTrue(rho.is_t_state())
            report = separability.classify(rho)
            self.assertClose(report.max_eigenvalue, (1 + 3 * p) / 4, 1e-12)
            separability.check_consistency(report, teleport.diagnostics(rho))

    def test_t_state_criteria_agree(self) -> None:
        gen = self.generator()
        for p in self.random_spectra(300):
            rho = DensityMatrix.bell_diagonal(p)
            # Hide the Bell-diagonal form behind random local unitaries
            rho = frame.apply_local(rho, sampling.random_local_unitary(gen), sampling.random_local_unitary(gen))
            report = separability.classify(rho)
            self.assertTrue(report.is_t_state)
            self.assertEqual(report.verdict == Verdict.SEPARABLE, max(p) <= 0.5)
            self.assertEqual(report.in_octahedron, separability.spectral_separable(rho))
            separability.check_consistency(report, teleport.diagnostics(rho))

    def test_local_invariance(self) -> None:
        gen = self.generator(11)
        states = [DensityMatrix.bell_diagonal(p) for p in self.random_spectra(25, 5)]
        states += [sampling.random_density(gen) for _ in range(25)]
        for rho in states:
            moved = frame.apply_local(rho, sampling.random_local_unitary(gen), sampling.random_local_unitary(gen))
            before, after = separability.classify(rho), separability.classify(moved)
            self.assertEqual(before.verdict, after.verdict)
            self.assertEqual(before.violations, after.violations)
            self.assertClose(before.l1_norm, after.l1_norm, 1e-9)

    def test_convexity(self) -> None:
        spectra = self.separable_spectra(200)
        rng = np.random.default_rng(3)
        for a, b in zip(spectra[::2], spectra[1::2]):
            weight = rng.random()
            rho = DensityMatrix.bell_diagonal(weight * a + (1 - weight) * b)
            self.assertEqual(separability.classify(rho).verdict, Verdict.SEPARABLE)

    def test_consistency_mismatch(self) -> None:
        report = separability.SeparabilityReport(
            is_t_state=True,
            in_tetrahedron=True,
            l1_norm=0.5,
            in_octahedron=True,
            max_eigenvalue=0.9,
            flip_overlaps=np.array([0.2, 0.3, 0.4, 0.1]),
            verdict=Verdict.SEPARABLE,
        )
        with self.assertRaises(exceptions.CriterionMismatchError):
            separability.check_consistency(report)

        wrong_verdict = separability.SeparabilityReport(
            is_t_state=True,
            in_tetrahedron=True,
            l1_norm=0.5,
            in_octahedron=True,
            max_eigenvalue=0.4,
            flip_overlaps=np.array([0.2, 0.3, 0.4, 0.1]),
            verdict=Verdict.INSEPARABLE,
        )
        with self.assertRaises(exceptions.CriterionMismatchError):
            separability.check_consistency(wrong_verdict)

        # Criteria on the boundary are not compared
        boundary = separability.SeparabilityReport(
            is_t_state=True,
            in_tetrahedron=True,
            l1_norm=1.0,
            in_octahedron=True,
            max_eigenvalue=0.5 + 1e-12,
            flip_overlaps=np.array([0.0, 0.5, 0.5, 0.5]),
            verdict=Verdict.SEPARABLE,
        )
        separability.check_consistency(boundary)

    def test_batch_criteria(self) -> None:
        spectra = self.random_spectra(100_000)
        criteria = separability.batch_criteria(spectra)
        self.assertEqual(int(np.sum(criteria.disagreements())), 0)
        self.assertArrayClose(criteria.n_value, criteria.l1_norm, 1e-12)
        above = criteria.p_max > 0.5
        self.assertArrayClose(criteria.l1_norm[above], 4 * criteria.p_max[above] - 1, 1e-12)
        fraction = float(np.mean(criteria.octahedron))
        self.assertClose(fraction, 0.5, 0.01)

    def test_batch_matches_single(self) -> None:
        spectra = self.random_spectra(100, 9)
        criteria = separability.batch_criteria(spectra)
        for i, p in enumerate(spectra):
            report = separability.classify(DensityMatrix.bell_diagonal(p))
            self.assertEqual(bool(criteria.octahedron[i]), report.in_octahedron)
            self.assertClose(criteria.l1_norm[i], report.l1_norm, 1e-10)

    def test_verdict(self) -> None:
        self.assertEqual(Verdict.from_string('separable'), Verdict.SEPARABLE)
        self.assertEqual(str(Verdict.INCONCLUSIVE), 'Verdict.INCONCLUSIVE')
        with self.assertRaises(KeyError):
            Verdict.from_string('maybe')
        report = separability.classify(DensityMatrix.werner(0.5))
        data = report.as_dict()
        self.assertEqual(data['verdict'], 'INSEPARABLE')
        self.assertEqual(data['violations'], [])
        self.assertEqual(len(data['flip_overlaps']), 4)
