"""Dense complex linear algebra for few-qubit Hilbert spaces (dim <= 2**8).

States are plain complex ndarray vectors and operators are square complex
ndarrays; qubit 1 is always the leftmost (most significant) tensor factor,
so the basis state |0110> of four qubits sits at index 6.

Everything here is a pure function over immutable inputs and is safe to
call from parallel sweeps.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatchError,
    NotHermitianError,
    NotInvolutoryError,
    NotOrthonormalError,
)

# Structural checks (hermiticity, unitarity, orthonormality, leakage) use
# ATOL_STRUCT; vector norms and frozen amplitudes use the tighter ATOL_NORM.
ATOL_STRUCT = 1e-10
ATOL_NORM = 1e-12

SIGMA_I = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with `a` as the more significant factor."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def kron_all(factors) -> np.ndarray:
    """Kronecker product of a sequence of matrices, first factor leftmost."""
    out = np.eye(1, dtype=np.complex128)
    for f in factors:
        out = np.kron(out, np.asarray(f, dtype=np.complex128))
    return out


def is_hermitian(m: np.ndarray, atol: float = ATOL_STRUCT) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.abs(m - m.conj().T).max() <= atol


def is_unitary(u: np.ndarray, atol: float = ATOL_STRUCT) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return np.abs(u @ u.conj().T - np.eye(u.shape[0])).max() <= atol


def spectral_norm(m: np.ndarray) -> float:
    """Operator 2-norm (largest singular value)."""
    return float(np.linalg.norm(np.asarray(m), 2))


def expm_hermitian(h: np.ndarray, scale: float, atol: float = ATOL_STRUCT) -> np.ndarray:
    """exp(-i * scale * h) for Hermitian h, via full eigendecomposition.

    Exact up to eigensolver accuracy; at these dimensions (<= 256) this is
    both cheap and more accurate than series methods.

    Raises
    ------
    NotHermitianError
        If h deviates from its own conjugate transpose by more than atol.
    """
    h = np.asarray(h, dtype=np.complex128)
    if not is_hermitian(h, atol):
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    evals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(-1j * scale * evals)) @ vecs.conj().T


def expm_involutory(h: np.ndarray, scale: float, atol: float = ATOL_STRUCT) -> np.ndarray:
    """Closed-form exp(-i * scale * h) for h with h @ h = c * I, c > 0.

    Every gate Hamiltonian built from an anticommuting pair of Pauli
    strings with cos/sin weights satisfies this, so the exponential
    collapses to cos(scale*sqrt(c)) * I - i * sin(scale*sqrt(c))/sqrt(c) * h.

    Raises
    ------
    NotInvolutoryError
        If h squared is not a positive multiple of the identity within atol.
    """
    h = np.asarray(h, dtype=np.complex128)
    dim = h.shape[0]
    h2 = h @ h
    c = float(np.real(np.trace(h2)) / dim)
    if c <= 0 or np.abs(h2 - c * np.eye(dim)).max() > atol:
        raise NotInvolutoryError("matrix squared is not a positive multiple of identity")
    root = np.sqrt(c)
    return np.cos(scale * root) * np.eye(dim) - 1j * (np.sin(scale * root) / root) * h


def phase_invariant_fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """|Tr(u v†)| / sqrt(Tr(u u†) Tr(v v†)).

    Equals 1 exactly when v = e^{i gamma} u for some real gamma (for
    unitary inputs), and is insensitive to the global phase either way.
    Also well-defined for non-unitary inputs such as bath-reduced
    propagators, where the normalization keeps it in [0, 1].
    """
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape:
        raise DimensionMismatchError(f"shape mismatch: {u.shape} vs {v.shape}")
    num = abs(np.trace(u @ v.conj().T))
    den = np.sqrt(np.real(np.trace(u @ u.conj().T)) * np.real(np.trace(v @ v.conj().T)))
    # Cauchy-Schwarz bounds num <= den; clamp the last-ulp float excess.
    return float(min(num / den, 1.0))


def subspace_projector(basis, atol: float = ATOL_STRUCT) -> np.ndarray:
    """Projector sum_k |psi_k><psi_k| onto the span of orthonormal vectors.

    Raises
    ------
    NotOrthonormalError
        If the Gram matrix of the input deviates from the identity.
    """
    b = np.asarray(list(basis), dtype=np.complex128)
    gram = b.conj() @ b.T
    if np.abs(gram - np.eye(b.shape[0])).max() > atol:
        raise NotOrthonormalError("basis vectors are not orthonormal within tolerance")
    return b.T @ b.conj()
