"""Dense complex linear algebra for small composite quantum systems.

All operators are plain ``numpy.ndarray`` objects of dtype complex128 in
row-major order. Dimensions in this package stay tiny (at most 16), so
everything is dense and eager; no attempt is made at sparsity or
large-dimension performance.

Entropies are reported in bits (log base 2) throughout.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "IDENTITY_2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "HERMITIAN_TOL",
    "EIGENVALUE_FLOOR",
    "as_complex_matrix",
    "dagger",
    "tensor",
    "direct_sum",
    "partial_trace",
    "eig_hermitian",
    "von_neumann_entropy",
    "entropy_of_spectrum",
    "is_density_matrix",
    "assert_density_matrix",
    "ket",
    "projector",
    "plus_state",
]

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: Tolerance for Hermiticity and trace checks (max-abs deviation).
HERMITIAN_TOL = 1e-10
#: Eigenvalues above this floor are treated as floating-point slack and
#: clamped to zero; anything below it is a genuine positivity violation.
EIGENVALUE_FLOOR = -1e-10


def as_complex_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-D complex128 array and reject non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices.

    Block (i, j) of the result equals ``a[i, j] * b``; the output shape is
    ``(a.rows * b.rows, a.cols * b.cols)``.
    """
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def direct_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block-diagonal matrix ``diag(a, b)`` with exactly zero off-diagonal blocks."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=complex)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


def partial_trace(rho: np.ndarray, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Reduced state on the subsystems listed in ``keep``.

    Parameters
    ----------
    rho : ndarray
        Square matrix on the composite space ``prod(dims)``.
    dims : sequence of int
        Dimension of each tensor factor, in order.
    keep : iterable of int
        Indices (into ``dims``) of the subsystems to keep. Order of the
        kept factors is preserved.

    Raises
    ------
    ValueError
        If ``prod(dims)`` does not match the matrix dimension or ``keep``
        is empty or out of range.
    """
    rho = as_complex_matrix(rho)
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise ValueError(f"subsystem dimensions must be positive, got {dims}")
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ValueError(
            f"matrix of shape {rho.shape} does not factor as subsystems {dims}"
        )
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise ValueError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    n = len(dims)
    reshaped = rho.reshape(dims + dims)
    # Row axis i and column axis n + i share a letter when subsystem i is
    # traced out; kept axes get distinct letters that survive to the output.
    letters = "abcdefghijklmnopqrstuvwxyz"
    row, col, out_row, out_col = [], [], [], []
    pos = 0
    for i in range(n):
        if i in keep:
            r, c = letters[pos], letters[pos + 1]
            pos += 2
            out_row.append(r)
            out_col.append(c)
        else:
            r = c = letters[pos]
            pos += 1
        row.append(r)
        col.append(c)
    subscripts = "".join(row + col) + "->" + "".join(out_row + out_col)
    kept_dim = int(np.prod([dims[i] for i in keep]))
    return np.einsum(subscripts, reshaped).reshape(kept_dim, kept_dim)


def eig_hermitian(h: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    Uses a dedicated Hermitian solver so the spectrum is real by
    construction. Raises ``ValueError`` if ``h`` deviates from Hermiticity
    by more than ``tol`` in max-abs norm.
    """
    h = as_complex_matrix(h)
    dev = np.max(np.abs(h - dagger(h))) if h.size else 0.0
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return np.linalg.eigvalsh(h)


def entropy_of_spectrum(eigs: np.ndarray) -> float:
    """Shannon entropy in bits of a probability spectrum, with 0 log 0 = 0.

    Eigenvalues in ``[EIGENVALUE_FLOOR, 0)`` are clamped to zero (and values
    marginally above 1 down to 1) before the logarithm; anything below the
    floor raises, since that indicates a genuinely non-positive state.
    """
    eigs = np.asarray(eigs, dtype=float)
    if eigs.size and eigs.min() < EIGENVALUE_FLOOR:
        raise ValueError(f"eigenvalue {eigs.min():.3e} below positivity floor")
    clamped = np.clip(eigs, 0.0, 1.0)
    nonzero = clamped[clamped > 0.0]
    return float(-(nonzero * np.log2(nonzero)).sum())


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy ``-Tr(rho log2 rho)`` in bits."""
    return entropy_of_spectrum(eig_hermitian(rho))


def is_density_matrix(rho: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    """True iff ``rho`` is Hermitian, unit-trace and positive within ``tol``."""
    try:
        assert_density_matrix(rho, tol=tol)
    except ValueError:
        return False
    return True


def assert_density_matrix(rho: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    """Raise ``ValueError`` unless ``rho`` satisfies all density-matrix invariants.

    Checks, each within ``tol``: Hermiticity (max-abs deviation of
    ``rho - rho†``), unit trace, and eigenvalues bounded below by ``-tol``.
    """
    rho = as_complex_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got {rho.shape}")
    dev = np.max(np.abs(rho - dagger(rho)))
    if dev > tol:
        raise ValueError(f"not Hermitian (max deviation {dev:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise ValueError(f"trace {tr} differs from 1 by more than {tol}")
    eigs = np.linalg.eigvalsh(rho)
    if eigs.min() < -tol:
        raise ValueError(f"negative eigenvalue {eigs.min():.3e}")


def ket(*amplitudes) -> np.ndarray:
    """Normalized column vector from a sequence of amplitudes."""
    v = np.asarray(amplitudes, dtype=complex).ravel()
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("zero vector cannot be normalized")
    return v / norm


def projector(vec: np.ndarray) -> np.ndarray:
    """Rank-one projector ``|v><v|`` onto a (normalized) vector."""
    v = np.asarray(vec, dtype=complex).ravel()
    return np.outer(v, v.conj())


def plus_state(n_qubits: int = 1) -> np.ndarray:
    """Density matrix of ``|+>^n``, the uniform-superposition control state."""
    dim = 2**n_qubits
    return np.full((dim, dim), 1.0 / dim, dtype=complex)
