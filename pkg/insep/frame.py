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
Local frames

Every single-qubit unitary U acts on Bloch vectors as a proper rotation O,
``U (n·σ) U† = (O n)·σ``. A product ``U1 ⊗ U2`` therefore maps the
Hilbert-Schmidt parameters as ``r' = O1 r``, ``s' = O2 s``, ``T' = O1 T O2^T``,
and a suitable pair of rotations brings T to diagonal form.

Example:
    >>> from insep import frame, state
    >>> canonical = frame.canonicalize(state.DensityMatrix.werner(0.5))
    >>> canonical.diag.round(6).tolist()
    [0.5, 0.5, -0.5]
"""
import dataclasses
import logging
import typing

import numpy as np
from scipy.spatial.transform import Rotation

from . import exceptions, linalg
from .state import DensityMatrix, PAULI, SIGMA
from .util import frozen

logger = logging.getLogger(__name__)

ORTHO_TOL: float = 1e-10
DIAG_TOL: float = 1e-10


class ProperRotation:
    """Real 3x3 orthogonal matrix with determinant +1"""

    _o: np.ndarray

    def __init__(self, o: typing.Any, tol: float = ORTHO_TOL) -> None:
        """Creates a proper rotation

        Args:
            o (typing.Any): 3x3 real matrix
            tol (float, optional): Tolerance on ``O^T O = I`` and ``det O = 1``.

        Raises:
            exceptions.NotProperRotationError: If o is not a proper rotation
        """
        matrix = np.asarray(o, dtype=float)
        if matrix.shape != (3, 3) or not np.all(np.isfinite(matrix)):
            raise exceptions.NotProperRotationError(f'Expected a finite 3x3 matrix, got shape {matrix.shape}')
        ortho_error = float(np.max(np.abs(matrix.T @ matrix - np.eye(3))))
        if ortho_error > tol:
            raise exceptions.NotProperRotationError(f'Matrix is not orthogonal (deviation {ortho_error:.3g})')
        det = float(np.linalg.det(matrix))
        if abs(det - 1.0) > tol:
            raise exceptions.NotProperRotationError(f'Determinant is {det:.6g}, not +1')
        self._o = frozen(matrix)

    @property
    def matrix(self) -> np.ndarray:
        return self._o

    @staticmethod
    def identity() -> 'ProperRotation':
        return ProperRotation(np.eye(3))

    @staticmethod
    def about_axis(axis: typing.Any, angle: float) -> 'ProperRotation':
        """Right-handed rotation by angle (radians) about axis"""
        vec = np.asarray(axis, dtype=float)
        return ProperRotation(Rotation.from_rotvec(vec / np.linalg.norm(vec) * angle).as_matrix())

    def unitary(self) -> 'LocalUnitary':
        """SU(2) preimage of this rotation (``unitary_from_rotation``)"""
        return unitary_from_rotation(self)

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, ProperRotation):
            return False
        return bool(np.allclose(self._o, other._o, atol=1e-9, rtol=0))

    __hash__ = None  # type: ignore

    def __str__(self) -> str:
        return f'ProperRotation({self._o.round(6).tolist()})'

    def __repr__(self) -> str:
        return self.__str__()


class LocalUnitary:
    """Single-qubit (2x2) unitary"""

    _u: np.ndarray

    def __init__(self, u: typing.Any, tol: float = ORTHO_TOL) -> None:
        """Creates a local unitary

        Raises:
            exceptions.NotUnitaryError: If ``U† U`` deviates from identity beyond tol
        """
        matrix = np.asarray(u, dtype=complex)
        if matrix.shape != (2, 2) or not np.all(np.isfinite(matrix)):
            raise exceptions.NotUnitaryError(f'Expected a finite 2x2 matrix, got shape {matrix.shape}')
        error = float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(2))))
        if error > tol:
            raise exceptions.NotUnitaryError(f'Matrix is not unitary (deviation {error:.3g})')
        self._u = frozen(matrix, dtype=complex)

    @property
    def matrix(self) -> np.ndarray:
        return self._u

    @staticmethod
    def identity() -> 'LocalUnitary':
        return LocalUnitary(np.eye(2))

    @staticmethod
    def exp_pauli(axis: typing.Any, angle: float) -> 'LocalUnitary':
        """``exp(-i angle n·σ / 2)``"""
        vec = np.asarray(axis, dtype=float)
        vec = vec / np.linalg.norm(vec)
        generator = np.einsum('n,nij->ij', vec, SIGMA)
        return LocalUnitary(np.cos(angle / 2) * PAULI[0] - 1j * np.sin(angle / 2) * generator)

    def rotation(self) -> ProperRotation:
        """Rotation induced on Bloch vectors (``rotation_from_unitary``)"""
        return rotation_from_unitary(self)

    def __str__(self) -> str:
        return f'LocalUnitary({self._u.round(6).tolist()})'

    def __repr__(self) -> str:
        return self.__str__()


@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """A state brought to diagonal T by local rotations

    Attributes:
        state (DensityMatrix): ``(U1 ⊗ U2) rho (U1 ⊗ U2)†``, with diagonal T
        o1 (ProperRotation): rotation of the first subsystem
        o2 (ProperRotation): rotation of the second subsystem
        diag (np.ndarray): signed diagonal of ``O1 T O2^T``, descending in absolute value
    """

    state: DensityMatrix
    o1: ProperRotation
    o2: ProperRotation
    diag: np.ndarray

    @property
    def u1(self) -> LocalUnitary:
        return self.o1.unitary()

    @property
    def u2(self) -> LocalUnitary:
        return self.o2.unitary()


def rotation_from_unitary(u: LocalUnitary) -> ProperRotation:
    """Rotation O with ``U (n·σ) U† = (O n)·σ``

    Computed entrywise as ``O_ij = 1/2 Tr(σ_i U σ_j U†)``, which is blind to the global phase.
    """
    mat = u.matrix
    conjugated = np.einsum('ab,jbc,dc->jad', mat, SIGMA, mat.conj())  # U σ_j U†
    o = np.einsum('iba,jab->ij', SIGMA, conjugated).real / 2
    return ProperRotation(o)


def unitary_from_rotation(o: ProperRotation) -> LocalUnitary:
    """SU(2) preimage of a proper rotation

    Of the two preimages ``±U`` the one whose quaternion has ``w > 0`` is
    returned (for ``w = 0``, the first nonzero vector component is positive).
    """
    x, y, z, w = Rotation.from_matrix(o.matrix).as_quat()
    quat = np.array([w, x, y, z])
    leading = quat[np.argmax(np.abs(quat) > 1e-12)]
    if leading < 0:
        quat = -quat
    w, x, y, z = quat
    return LocalUnitary(w * PAULI[0] - 1j * (x * PAULI[1] + y * PAULI[2] + z * PAULI[3]))


def apply_local(rho: DensityMatrix, u1: LocalUnitary, u2: LocalUnitary) -> DensityMatrix:
    """``(U1 ⊗ U2) rho (U1 ⊗ U2)†``"""
    u = np.kron(u1.matrix, u2.matrix)
    return DensityMatrix(u @ rho.matrix @ u.conj().T, rho.tolerances)


def canonicalize(rho: DensityMatrix) -> CanonicalForm:
    """Diagonalizes T with a pair of proper rotations

    T is decomposed as ``U diag(sigma) V^T``. When U or V is a reflection its
    last column is negated together with the smallest singular value, so both
    rotations stay proper and the sign of ``det T`` ends up on the entry of
    smallest magnitude.

    Raises:
        exceptions.ConvergenceError: If the 3x3 SVD does not converge
    """
    t = rho.to_hs().t
    u, sigma, v = linalg.svd3(t)
    for name, mat in (('U', u), ('V', v)):
        if np.linalg.det(mat) < 0:
            logger.debug('Repairing reflection in %s of the SVD', name)
            mat[:, 2] = -mat[:, 2]

    o1 = ProperRotation(u.T)
    o2 = ProperRotation(v.T)
    canonical = apply_local(rho, o1.unitary(), o2.unitary())

    residual = o1.matrix @ t @ o2.matrix.T
    diag = np.diag(residual).copy()
    off = float(np.max(np.abs(residual - np.diag(diag))))
    if off > DIAG_TOL:
        logger.warning('Canonical T has off-diagonal residual %g', off)

    return CanonicalForm(state=canonical, o1=o1, o2=o2, diag=frozen(diag))
