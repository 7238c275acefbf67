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
Small dense solvers

Cyclic Jacobi eigensolver for Hermitian matrices (through the real symmetric
embedding) and one-sided Jacobi SVD for 3x3 real matrices. Both are
unconditionally convergent on their inputs, and fast enough for the 4x4 and
3x3 sizes this package works with.
"""
import logging
import typing

import numpy as np

from . import exceptions

logger = logging.getLogger(__name__)

OFFDIAG_TOL: float = 1e-13
MAX_SWEEPS: int = 100


def jacobi_eigh(
    matrix: np.ndarray, tol: float = OFFDIAG_TOL, max_sweeps: int = MAX_SWEEPS
) -> typing.Tuple[np.ndarray, np.ndarray]:
    """Eigen decomposition of a real symmetric matrix by cyclic Jacobi rotations

    Args:
        matrix (np.ndarray): Real symmetric n x n matrix
        tol (float, optional): Off-diagonal Frobenius norm threshold (relative to max(1, ||A||)).
        max_sweeps (int, optional): Sweep budget. Defaults to 100.

    Returns:
        typing.Tuple[np.ndarray, np.ndarray]: eigenvalues (descending) and eigenvectors as columns

    Raises:
        exceptions.ConvergenceError: If the sweep budget is exhausted
    """
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(max_sweeps + 1):
        off = np.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= threshold:
            logger.debug('Jacobi converged after %d sweeps (off=%g)', sweep, off)
            values = np.diag(a).copy()
            order = np.argsort(-values, kind='stable')
            return values[order], v[:, order]
        if sweep == max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    raise exceptions.ConvergenceError(f'Jacobi eigensolver did not converge in {max_sweeps} sweeps')


def eigvalsh(matrix: np.ndarray, tol: float = OFFDIAG_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues (descending) of a Hermitian matrix

    The n x n complex matrix H = A + iB is embedded as the 2n x 2n real symmetric
    matrix [[A, -B], [B, A]], whose spectrum is the spectrum of H with every
    eigenvalue doubled.

    Args:
        matrix (np.ndarray): Hermitian matrix

    Returns:
        np.ndarray: Eigenvalues, descending

    Raises:
        exceptions.ConvergenceError: If the sweep budget is exhausted
    """
    h = np.asarray(matrix, dtype=complex)
    h = (h + h.conj().T) / 2
    n = h.shape[0]
    re, im = h.real, h.imag
    embedded = np.block([[re, -im], [im, re]])
    values, _ = jacobi_eigh(embedded, tol=tol, max_sweeps=max_sweeps)
    return values.reshape(n, 2).mean(axis=1)


def _complete_basis(columns: np.ndarray, missing: typing.List[int]) -> np.ndarray:
    """Fills the ``missing`` columns of a 3x3 matrix with an orthonormal completion"""
    result = columns.copy()
    present = [i for i in range(3) if i not in missing]
    for i in missing:
        for axis in np.eye(3):
            candidate = axis.copy()
            for j in present:
                candidate -= np.dot(result[:, j], candidate) * result[:, j]
            norm = np.linalg.norm(candidate)
            if norm > 1e-6:
                result[:, i] = candidate / norm
                present.append(i)
                break
    return result


def _orthonormalize(columns: np.ndarray) -> np.ndarray:
    """Polishes a nearly orthogonal matrix, keeping the direction of every column"""
    q, r = np.linalg.qr(columns)
    return q * np.where(np.diag(r) < 0, -1.0, 1.0)


def svd3(
    matrix: np.ndarray, tol: float = OFFDIAG_TOL, max_sweeps: int = MAX_SWEEPS
) -> typing.Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition of a real 3x3 matrix by one-sided Jacobi

    Columns of ``A V`` are rotated pairwise until mutually orthogonal (relative
    criterion ``|a_p . a_q| <= tol |a_p| |a_q|``).

    Args:
        matrix (np.ndarray): Real 3x3 matrix

    Returns:
        typing.Tuple[np.ndarray, np.ndarray, np.ndarray]: ``(U, sigma, V)`` with
        ``matrix = U @ diag(sigma) @ V.T``, sigma descending and nonnegative, U and V orthogonal.

    Raises:
        exceptions.ConvergenceError: If the sweep budget is exhausted
    """
    a = np.array(matrix, dtype=float, copy=True)
    v = np.eye(3)

    for sweep in range(max_sweeps):
        rotated = False
        for p in range(2):
            for q in range(p + 1, 3):
                alpha = float(np.dot(a[:, p], a[:, p]))
                beta = float(np.dot(a[:, q], a[:, q]))
                gamma = float(np.dot(a[:, p], a[:, q]))
                if alpha == 0.0 or beta == 0.0 or abs(gamma) <= tol * np.sqrt(alpha * beta):
                    continue
                rotated = True
                zeta = (beta - alpha) / (2.0 * gamma)
                t = (1.0 if zeta >= 0 else -1.0) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
        if not rotated:
            logger.debug('One-sided Jacobi SVD converged after %d sweeps', sweep)
            break
    else:
        raise exceptions.ConvergenceError(f'3x3 SVD did not converge in {max_sweeps} sweeps')

    sigma = np.linalg.norm(a, axis=0)
    order = np.argsort(-sigma, kind='stable')
    sigma, a, v = sigma[order], a[:, order], v[:, order]

    u = np.zeros((3, 3))
    missing = []
    for i in range(3):
        if sigma[i] > 1e-300:
            u[:, i] = a[:, i] / sigma[i]
        else:
            missing.append(i)
    if missing:
        u = _complete_basis(u, missing)

    return _orthonormalize(u), sigma, _orthonormalize(v)
