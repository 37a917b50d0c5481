"""Dense complex-matrix primitives: Hermitian eigendecomposition, Kronecker
products, partial traces, and the trace norm.

Everything here is a pure function on numpy arrays.  The operators this
package meets are desk scale (dimension products of at most 64), so dense
O(n^3) algorithms are used without apology.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NonHermitianError, NonSquareError

DEFAULT_HERMITICITY_TOL = 1e-9


def _as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation between ``m`` and its conjugate transpose."""
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m - m.conj().T)))


@dataclass(frozen=True)
class EigenSystem:
    """Real spectrum in ascending order plus matching orthonormal eigenvectors.

    ``eigenvectors[:, k]`` is the unit eigenvector for ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eig(m, hermiticity_tol: float = DEFAULT_HERMITICITY_TOL) -> EigenSystem:
    """Eigendecompose a Hermitian matrix.

    Eigenvalues come back ascending.  Each eigenvector is rotated by a global
    phase so that its largest-magnitude component is real and positive, which
    pins the output down for non-degenerate spectra (degenerate eigenspaces
    still have basis freedom, as any eigensolver's do).

    Raises
    ------
    NonSquareError
        ``m`` is not square.
    NonHermitianError
        ``max |m - m^dagger|`` exceeds ``hermiticity_tol``.
    """
    mat = _as_matrix(m)
    if mat.shape[0] != mat.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {mat.shape}")
    defect = hermiticity_defect(mat)
    if defect > hermiticity_tol:
        raise NonHermitianError(
            f"hermiticity defect {defect:.3e} exceeds tolerance {hermiticity_tol:.3e}"
        )
    eigenvalues, eigenvectors = np.linalg.eigh((mat + mat.conj().T) / 2.0)
    return EigenSystem(eigenvalues=eigenvalues, eigenvectors=_fix_phases(eigenvectors))


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    fixed = np.array(vectors)
    for k in range(fixed.shape[1]):
        column = fixed[:, k]
        pivot = column[int(np.argmax(np.abs(column)))]
        fixed[:, k] = column * (pivot.conjugate() / abs(pivot))
    return fixed


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two matrices; block (i, j) equals ``a[i, j] * b``."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def partial_trace(m, d1: int, d2: int, keep: int) -> np.ndarray:
    """Trace out one tensor factor of an operator on ``C^d1 (x) C^d2``.

    ``keep=1`` returns the d1 x d1 reduction over the first factor, ``keep=2``
    the d2 x d2 reduction over the second.
    """
    mat = _as_matrix(m)
    if d1 < 1 or d2 < 1:
        raise DimensionMismatchError("subsystem dimensions must be positive")
    if mat.shape != (d1 * d2, d1 * d2):
        raise DimensionMismatchError(
            f"operator shape {mat.shape} does not match dims ({d1}, {d2})"
        )
    if keep not in (1, 2):
        raise ValueError(f"keep must be 1 or 2, got {keep!r}")
    blocks = mat.reshape(d1, d2, d1, d2)
    if keep == 1:
        return np.einsum("ijkj->ik", blocks)
    return np.einsum("ijil->jl", blocks)


def trace_norm(m, hermiticity_tol: float = DEFAULT_HERMITICITY_TOL) -> float:
    """Sum of the absolute eigenvalues of a Hermitian matrix."""
    system = hermitian_eig(m, hermiticity_tol=hermiticity_tol)
    return float(np.sum(np.abs(system.eigenvalues)))


__all__ = [
    "DEFAULT_HERMITICITY_TOL",
    "EigenSystem",
    "hermitian_eig",
    "hermiticity_defect",
    "partial_trace",
    "tensor_product",
    "trace_norm",
]
