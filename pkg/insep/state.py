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
This module contains the two-qubit state and its Hilbert-Schmidt representation.

A state is written in the Pauli tensor basis as::

    rho = 1/4 (I⊗I + r·σ⊗I + I⊗s·σ + sum_nm t_nm σ_n⊗σ_m)

with ``t_nm = Tr(rho σ_n⊗σ_m)`` (first index belongs to the first subsystem).
``r`` and ``s`` are the Bloch vectors of the reductions and ``T`` holds the
correlations.

Example:
    >>> import numpy as np
    >>> from insep import state
    >>> rho = state.DensityMatrix.werner(0.5)
    >>> np.diag(rho.to_hs().t).round(6).tolist()
    [-0.5, -0.5, -0.5]
    >>> rho.spectrum().round(6).tolist()
    [0.625, 0.125, 0.125, 0.125]
"""
import dataclasses
import functools
import logging
import typing

import numpy as np

from . import exceptions, linalg
from .util import Tolerances, TSTATE_TOL, MARGIN, cache_on, frozen, as_vector

logger = logging.getLogger(__name__)

# sigma_0 = I, sigma_1..3 = x, y, z
PAULI: np.ndarray = frozen(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
SIGMA: np.ndarray = frozen(PAULI[1:], dtype=complex)

# PAULI_PRODUCTS[a, b] = PAULI[a] ⊗ PAULI[b]
PAULI_PRODUCTS: np.ndarray = frozen(
    np.einsum('aij,bkl->abikjl', PAULI, PAULI).reshape(4, 4, 4, 4), dtype=complex
)

IDENTITY4: np.ndarray = frozen(np.eye(4), dtype=complex)

# Entrywise tolerance for state equality
EQUALITY_TOL: float = 1e-10


def partial_trace(matrix: np.ndarray, subsystem: int) -> np.ndarray:
    """Reduced 2x2 matrix of a 4x4 operator

    Args:
        matrix (np.ndarray): 4x4 operator on C^2 ⊗ C^2
        subsystem (int): Subsystem to KEEP (1 or 2)

    Returns:
        np.ndarray: 2x2 reduced operator
    """
    tensor = np.asarray(matrix).reshape(2, 2, 2, 2)
    if subsystem == 1:
        return np.einsum('ijkj->ik', tensor)
    if subsystem == 2:
        return np.einsum('ijil->jl', tensor)
    raise exceptions.OutOfRangeError(f'Invalid subsystem {subsystem}: must be 1 or 2')


def bloch_matrix(vector: typing.Any) -> np.ndarray:
    """Returns ``1/2 (I + v·σ)`` for a real 3-vector v"""
    vec = as_vector(vector, 3, 'Bloch vector')
    return (PAULI[0] + np.einsum('n,nij->ij', vec, SIGMA)) / 2


def _into_ball(vector: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(vector))
    return vector / norm if norm > 1.0 else vector


def qubit_state(matrix: typing.Any, tolerances: Tolerances = Tolerances.INGEST) -> np.ndarray:
    """Validates a single-qubit density matrix

    Args:
        matrix (typing.Any): 2x2 complex matrix
        tolerances (Tolerances, optional): Defaults to Tolerances.INGEST.

    Returns:
        np.ndarray: The Hermitian part of the matrix

    Raises:
        exceptions.InvalidStateError: (or a subclass) naming the violated invariant
    """
    try:
        entries = np.array(matrix, dtype=complex, copy=True)
    except (TypeError, ValueError) as e:
        raise exceptions.InvalidStateError(f'Not a numeric matrix: {e}') from e
    if entries.shape != (2, 2) or not np.all(np.isfinite(entries)):
        raise exceptions.InvalidStateError(f'Expected a finite 2x2 matrix, got shape {entries.shape}')
    herm_error = float(np.max(np.abs(entries - entries.conj().T)))
    if herm_error > tolerances.herm:
        raise exceptions.NotHermitianError(f'Matrix is not Hermitian (deviation {herm_error:.3g})', herm_error)
    trace_error = float(abs(np.trace(entries) - 1.0))
    if trace_error > tolerances.trace:
        raise exceptions.TraceNotOneError(f'Trace deviates from 1 by {trace_error:.3g}', trace_error)
    entries = (entries + entries.conj().T) / 2
    lowest = float(linalg.eigvalsh(entries)[-1])
    if lowest < -tolerances.psd:
        raise exceptions.NotPositiveError(f'Matrix has negative eigenvalue {lowest:.3g}', -lowest)
    return entries


@dataclasses.dataclass(frozen=True)
class HSParams:
    """Hilbert-Schmidt parameters ``(r, s, T)`` of a two-qubit operator

    Attributes:
        r (np.ndarray): Bloch vector of the first reduction
        s (np.ndarray): Bloch vector of the second reduction
        t (np.ndarray): 3x3 correlation matrix, ``t[n, m] = Tr(rho σ_n⊗σ_m)``
    """

    r: np.ndarray
    s: np.ndarray
    t: np.ndarray

    def __post_init__(self) -> None:
        r = as_vector(self.r, 3, 'r')
        s = as_vector(self.s, 3, 's')
        try:
            t = np.asarray(self.t, dtype=float)
        except (TypeError, ValueError) as e:
            raise exceptions.OutOfRangeError(f't must be a real 3x3 matrix: {e}') from e
        if t.shape != (3, 3) or not np.all(np.isfinite(t)):
            raise exceptions.OutOfRangeError(f't must be a finite real 3x3 matrix, got shape {t.shape}')

        for name, norm in (('r', np.linalg.norm(r)), ('s', np.linalg.norm(s))):
            if norm > 1 + MARGIN:
                raise exceptions.OutOfRangeError(f'|{name}| = {norm} is outside the Bloch ball')
        if np.max(np.abs(t)) > 1 + MARGIN:
            raise exceptions.OutOfRangeError(f'T entries must lie in [-1, 1], got {np.max(np.abs(t))}')

        object.__setattr__(self, 'r', frozen(r))
        object.__setattr__(self, 's', frozen(s))
        object.__setattr__(self, 't', frozen(t))

    def is_t_state(self, tol: float = TSTATE_TOL) -> bool:
        """True if both reductions are maximally mixed (r = s = 0 within tol)"""
        return bool(np.linalg.norm(self.r) <= tol and np.linalg.norm(self.s) <= tol)

    def is_diagonal(self, tol: float = 1e-10) -> bool:
        """True if the off-diagonal entries of T are below tol"""
        return bool(np.max(np.abs(self.t - np.diag(np.diag(self.t)))) <= tol)

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        return {'r': self.r.tolist(), 's': self.s.tolist(), 't': self.t.tolist()}

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, HSParams):
            return False
        return bool(
            np.allclose(self.r, other.r, atol=EQUALITY_TOL, rtol=0)
            and np.allclose(self.s, other.s, atol=EQUALITY_TOL, rtol=0)
            and np.allclose(self.t, other.t, atol=EQUALITY_TOL, rtol=0)
        )

    def __str__(self) -> str:
        return f'HSParams(r={self.r.tolist()}, s={self.s.tolist()}, t={self.t.tolist()})'

    def __repr__(self) -> str:
        return self.__str__()


@dataclasses.dataclass(frozen=True)
class BellSpectrum:
    """Weights ``(p0, p1, p2, p3)`` of a state over the Bell projectors

    Attributes:
        p (np.ndarray): Probability 4-vector; ``p[0]`` is the singlet weight
    """

    p: np.ndarray
    tol: float = MARGIN

    def __post_init__(self) -> None:
        try:
            p = np.asarray(self.p, dtype=float).reshape(-1)
        except (TypeError, ValueError) as e:
            raise exceptions.InvalidSpectrumError(f'Bell spectrum must be 4 real numbers: {e}') from e
        if p.shape != (4,) or not np.all(np.isfinite(p)):
            raise exceptions.InvalidSpectrumError(f'Bell spectrum must be 4 finite numbers, got {self.p!r}')
        if np.min(p) < -self.tol:
            raise exceptions.InvalidSpectrumError(f'Negative Bell weight {np.min(p)}')
        if abs(np.sum(p) - 1.0) > self.tol:
            raise exceptions.InvalidSpectrumError(f'Bell weights sum to {np.sum(p)}, not 1')
        object.__setattr__(self, 'p', frozen(np.clip(p, 0.0, None)))

    @property
    def p_max(self) -> float:
        """Largest weight"""
        return float(np.max(self.p))

    @property
    def t_vector(self) -> np.ndarray:
        """Diagonal of T of the Bell-diagonal state, ``sum_i p_i t_i``"""
        return self.p @ BellBasis.VERTICES

    @staticmethod
    def from_t_vector(t: typing.Any) -> 'BellSpectrum':
        """Inverse of :attr:`t_vector`: ``p_i = (1 + (t_i, t)) / 4``

        Raises:
            exceptions.InvalidSpectrumError: If t lies outside the tetrahedron
        """
        vec = as_vector(t, 3, 't')
        return BellSpectrum((1.0 + BellBasis.VERTICES @ vec) / 4.0)

    def __str__(self) -> str:
        return f'BellSpectrum({self.p.tolist()})'

    def __repr__(self) -> str:
        return self.__str__()


class BellBasis:
    """The four Bell projectors P0..P3

    ``P0`` is the singlet. The vector ``VERTICES[i]`` is the diagonal of the T
    matrix of ``P[i]``; together they are the vertices of the tetrahedron of
    all states with r = s = 0 and diagonal T.
    """

    VERTICES: typing.ClassVar[np.ndarray] = frozen(
        [
            [-1, -1, -1],
            [-1, 1, 1],
            [1, -1, 1],
            [1, 1, -1],
        ]
    )

    # Amplitudes on |00>, |01>, |10>, |11>
    VECTORS: typing.ClassVar[np.ndarray] = frozen(
        np.array(
            [
                [0, 1, -1, 0],  # (e1e2 - e2e1)/√2, singlet
                [1, 0, 0, -1],  # (e1e1 - e2e2)/√2
                [1, 0, 0, 1],  # (e1e1 + e2e2)/√2
                [0, 1, 1, 0],  # (e1e2 + e2e1)/√2
            ]
        )
        / np.sqrt(2),
        dtype=complex,
    )

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def projector(index: int) -> 'DensityMatrix':
        """Returns the Bell projector ``P[index]``

        Args:
            index (int): 0 (singlet) to 3

        Raises:
            exceptions.OutOfRangeError: If index is not in 0..3
        """
        if index not in (0, 1, 2, 3):
            raise exceptions.OutOfRangeError(f'Invalid Bell index {index}')
        vec = BellBasis.VECTORS[index]
        return DensityMatrix(np.outer(vec, vec.conj()))

    @staticmethod
    def projectors() -> typing.List['DensityMatrix']:
        """All four projectors, in index order"""
        return [BellBasis.projector(i) for i in range(4)]


class DensityMatrix:
    """Two-qubit density matrix

    Instances are immutable and always valid: the constructor rejects any
    matrix that is not Hermitian, unit trace and positive semidefinite within
    the given tolerances.
    """

    _matrix: np.ndarray
    _tolerances: Tolerances

    def __init__(self, matrix: typing.Any, tolerances: Tolerances = Tolerances.INTERNAL) -> None:
        """Creates a validated density matrix

        Args:
            matrix (typing.Any): 4x4 complex matrix (anything numpy can convert)
            tolerances (Tolerances, optional): Acceptance tolerances. Defaults to Tolerances.INTERNAL.

        Raises:
            exceptions.InvalidStateError: If the matrix is not 4x4 or not finite
            exceptions.NotHermitianError: If it is not Hermitian
            exceptions.TraceNotOneError: If its trace is not one
            exceptions.NotPositiveError: If it has a negative eigenvalue
        """
        try:
            entries = np.array(matrix, dtype=complex, copy=True)
        except (TypeError, ValueError) as e:
            raise exceptions.InvalidStateError(f'Not a numeric matrix: {e}') from e
        if entries.shape != (4, 4):
            raise exceptions.InvalidStateError(f'Expected a 4x4 matrix, got shape {entries.shape}')
        if not np.all(np.isfinite(entries)):
            raise exceptions.InvalidStateError('Matrix has non finite entries')

        herm_error = float(np.max(np.abs(entries - entries.conj().T)))
        if herm_error > tolerances.herm:
            raise exceptions.NotHermitianError(f'Matrix is not Hermitian (deviation {herm_error:.3g})', herm_error)

        trace_error = float(abs(np.trace(entries) - 1.0))
        if trace_error > tolerances.trace:
            raise exceptions.TraceNotOneError(f'Trace deviates from 1 by {trace_error:.3g}', trace_error)

        entries = (entries + entries.conj().T) / 2
        entries.flags.writeable = False
        self._matrix = entries
        self._tolerances = tolerances

        lowest = float(self.spectrum()[-1])
        if lowest < -tolerances.psd:
            raise exceptions.NotPositiveError(f'Matrix has negative eigenvalue {lowest:.3g}', -lowest)

    @property
    def matrix(self) -> np.ndarray:
        """Read-only 4x4 complex matrix"""
        return self._matrix

    @property
    def tolerances(self) -> Tolerances:
        """Tolerances the state was accepted with"""
        return self._tolerances

    @staticmethod
    def from_matrix(entries: typing.Any, tolerances: Tolerances = Tolerances.INGEST) -> 'DensityMatrix':
        """Validates external data as a density matrix

        Args:
            entries (typing.Any): 4x4 complex matrix
            tolerances (Tolerances, optional): Defaults to Tolerances.INGEST.

        Raises:
            exceptions.InvalidStateError: (or a subclass) naming the violated invariant
        """
        return DensityMatrix(entries, tolerances)

    @staticmethod
    def from_hs(params: HSParams, tolerances: Tolerances = Tolerances.INGEST) -> 'DensityMatrix':
        """Assembles ``1/4 (I⊗I + r·σ⊗I + I⊗s·σ + sum t_nm σ_n⊗σ_m)``

        Raises:
            exceptions.NotPositiveError: If the assembled operator is not positive
        """
        coeffs = np.empty((4, 4))
        coeffs[0, 0] = 1.0
        coeffs[1:, 0] = params.r
        coeffs[0, 1:] = params.s
        coeffs[1:, 1:] = params.t
        return DensityMatrix(np.einsum('ab,abij->ij', coeffs, PAULI_PRODUCTS) / 4, tolerances)

    @staticmethod
    def maximally_mixed() -> 'DensityMatrix':
        """``I/4``"""
        return DensityMatrix(IDENTITY4 / 4)

    @staticmethod
    def bell_diagonal(p: typing.Union[BellSpectrum, typing.Sequence[float], np.ndarray]) -> 'DensityMatrix':
        """Mixture ``sum_i p_i P_i`` of the Bell projectors

        Raises:
            exceptions.InvalidSpectrumError: If p is not a probability vector
        """
        spectrum = p if isinstance(p, BellSpectrum) else BellSpectrum(np.asarray(p, dtype=float))
        matrix = np.einsum('i,ij,ik->jk', spectrum.p, BellBasis.VECTORS, BellBasis.VECTORS.conj())
        return DensityMatrix(matrix)

    @staticmethod
    def werner(p: float) -> 'DensityMatrix':
        """Werner state ``p P0 + (1 - p) I/4``

        Raises:
            exceptions.OutOfRangeError: If p is outside [0, 1]
        """
        if not 0.0 <= p <= 1.0:
            raise exceptions.OutOfRangeError(f'Werner weight {p} outside [0, 1]')
        return DensityMatrix(p * BellBasis.projector(0).matrix + (1 - p) * IDENTITY4 / 4)

    @staticmethod
    def edge_state(axis: int, sign: int) -> 'DensityMatrix':
        """Separable state sitting on the octahedron vertex ``sign * e_axis``

        Built as ``1/2 (P+ ⊗ P± + P- ⊗ P∓)`` with ``P±`` the eigenprojectors of ``σ_axis``.

        Args:
            axis (int): 1, 2 or 3
            sign (int): +1 or -1
        """
        if axis not in (1, 2, 3) or sign not in (1, -1):
            raise exceptions.OutOfRangeError(f'Invalid edge state ({axis}, {sign})')
        plus = (PAULI[0] + PAULI[axis]) / 2
        minus = (PAULI[0] - PAULI[axis]) / 2
        same, other = (plus, minus) if sign == 1 else (minus, plus)
        return DensityMatrix((np.kron(plus, same) + np.kron(minus, other)) / 2)

    @staticmethod
    def product(first: typing.Any, second: typing.Any) -> 'DensityMatrix':
        """Product state of two 2x2 density matrices"""
        return DensityMatrix(np.kron(np.asarray(first, dtype=complex), np.asarray(second, dtype=complex)))

    @cache_on('hs')
    def to_hs(self) -> HSParams:
        """Hilbert-Schmidt parameters of the state

        Rounding within the acceptance tolerances may push ``|r|``, ``|s|`` or
        an entry of T slightly past 1; those are brought back to the boundary.

        Returns:
            HSParams: ``r_n = Tr(rho σ_n⊗I)``, ``s_m = Tr(rho I⊗σ_m)``, ``t_nm = Tr(rho σ_n⊗σ_m)``
        """
        coeffs = np.einsum('abij,ji->ab', PAULI_PRODUCTS, self._matrix).real
        r, s = _into_ball(coeffs[1:, 0]), _into_ball(coeffs[0, 1:])
        return HSParams(r=r, s=s, t=np.clip(coeffs[1:, 1:], -1.0, 1.0))

    def reduce(self, subsystem: int) -> np.ndarray:
        """Reduced state of one subsystem, ``1/2 (I + r·σ)`` or ``1/2 (I + s·σ)``

        Args:
            subsystem (int): 1 or 2

        Returns:
            np.ndarray: 2x2 density matrix
        """
        hs = self.to_hs()
        if subsystem == 1:
            return bloch_matrix(hs.r)
        if subsystem == 2:
            return bloch_matrix(hs.s)
        raise exceptions.OutOfRangeError(f'Invalid subsystem {subsystem}: must be 1 or 2')

    def correlation(self, a: typing.Any, b: typing.Any) -> float:
        """Correlation ``E(a, b) = Tr(rho a·σ⊗b·σ) = (a, T b)``

        Raises:
            exceptions.NonUnitDirectionError: If a or b is not a unit vector
        """
        vec_a = as_vector(a, 3, 'a')
        vec_b = as_vector(b, 3, 'b')
        for name, vec in (('a', vec_a), ('b', vec_b)):
            if abs(np.linalg.norm(vec) - 1.0) > MARGIN:
                raise exceptions.NonUnitDirectionError(f'|{name}| = {np.linalg.norm(vec)} is not 1')
        return float(vec_a @ self.to_hs().t @ vec_b)

    def hs_inner(self, other: 'DensityMatrix') -> float:
        """``Tr(rho rho') = 1/4 (1 + (r, r') + (s, s') + Tr(T T'^T))``"""
        mine, theirs = self.to_hs(), other.to_hs()
        return float(
            (1.0 + mine.r @ theirs.r + mine.s @ theirs.s + np.trace(mine.t @ theirs.t.T)) / 4.0
        )

    @cache_on('spectrum')
    def spectrum(self) -> np.ndarray:
        """Eigenvalues, descending

        Raises:
            exceptions.ConvergenceError: If the eigensolver does not converge
        """
        return frozen(linalg.eigvalsh(self._matrix))

    def purity(self) -> float:
        """``Tr(rho^2)``"""
        return float(np.sum(np.abs(self._matrix) ** 2))

    def is_t_state(self, tol: float = TSTATE_TOL) -> bool:
        """True if both reductions are maximally mixed"""
        return self.to_hs().is_t_state(tol)

    @cache_on('bell')
    def bell_spectrum(self) -> BellSpectrum:
        """Bell weights of a T-state, ``p_i = 1/4 (1 + (t_i, diag))``

        A state whose T is already diagonal is read in its own frame, any
        other in its canonical frame. Either way the state is Bell diagonal
        there, so the weights are also its eigenvalues.

        Raises:
            exceptions.NotTStateError: If the state has a reduction that is not maximally mixed
        """
        from . import frame

        hs = self.to_hs()
        if not hs.is_t_state():
            raise exceptions.NotTStateError('Bell spectrum is only defined for T-states')
        diag = np.diag(hs.t) if hs.is_diagonal() else frame.canonicalize(self).diag
        weights = np.clip((1.0 + BellBasis.VERTICES @ diag) / 4.0, 0.0, None)
        return BellSpectrum(weights / np.sum(weights))

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, DensityMatrix):
            return False
        return bool(np.max(np.abs(self._matrix - other._matrix)) <= EQUALITY_TOL)

    __hash__ = None  # type: ignore

    def __str__(self) -> str:
        hs = self.to_hs()
        return f'DensityMatrix(r={hs.r.round(6).tolist()}, s={hs.s.round(6).tolist()}, t={hs.t.round(6).tolist()})'

    def __repr__(self) -> str:
        return self.__str__()
