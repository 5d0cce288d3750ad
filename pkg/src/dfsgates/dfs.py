"""Decoherence-free subspaces of the decoupling group and the logical encoding.

The group on N qubits (N even) splits the Hilbert space into four
2**(N-2)-dimensional sectors labelled by the simultaneous eigenvalues of
the commuting global strings X...X and Z...Z. The all-(+1) sector carries
the N-2 encoded qubits; its basis states are the two-branch superpositions

    even-parity r:  (|0>|r>|0> + |1>|NOT r>|1>) / sqrt(2)
    odd-parity  r:  (|1>|r>|0> + |0>|NOT r>|1>) / sqrt(2)

with r the middle (N-2)-bit string, which is also the logical label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatchError,
    LogicalIndexError,
    OddQubitCountError,
    TooFewQubitsError,
)
from .linalg import ATOL_NORM, SIGMA_I, SIGMA_Y, SIGMA_Z, kron_all
from .pauli import DecouplingGroup, pauli_to_matrix

_FLIP = str.maketrans("01", "10")


@dataclass(frozen=True, eq=False)
class LogicalBasis:
    """Ordered orthonormal basis of the all-(+1) sector.

    states[k] is the physical vector for labels[k]; labels are the
    (N-2)-bit strings in lexicographic order, so labels[k] == bits of k.
    """

    n_physical: int
    labels: tuple[str, ...]
    states: np.ndarray = field(repr=False)  # shape (2**n_logical, 2**n_physical)

    @property
    def n_logical(self) -> int:
        return self.n_physical - 2

    @property
    def n_states(self) -> int:
        return len(self.labels)

    def state(self, label: str) -> np.ndarray:
        return self.states[int(label, 2)]


def build_logical_basis(n: int) -> LogicalBasis:
    """Construct the logical basis for n physical qubits (even, 4..8)."""
    if n % 2:
        raise OddQubitCountError(f"logical encoding needs even n, got {n}")
    if n < 4:
        raise TooFewQubitsError(f"logical encoding needs n >= 4, got {n}")
    n_logical = n - 2
    dim = 2**n
    states = np.zeros((2**n_logical, dim), dtype=np.complex128)
    labels = []
    for r in range(2**n_logical):
        bits = format(r, f"0{n_logical}b")
        first = "0" if bits.count("1") % 2 == 0 else "1"
        branch1 = first + bits + "0"
        branch2 = ("1" if first == "0" else "0") + bits.translate(_FLIP) + "1"
        states[r, int(branch1, 2)] = 1 / np.sqrt(2)
        states[r, int(branch2, 2)] = 1 / np.sqrt(2)
        labels.append(bits)
    return LogicalBasis(n, tuple(labels), states)


def dfs_decomposition(group: DecouplingGroup) -> list[tuple[tuple[int, int, int, int], int]]:
    """Simultaneous eigensectors of the group, as (eigenvalue tuple, dimension).

    Eigenvalue tuples are ordered like the group elements (I, X, Y, Z),
    with the Y entry the eigenvalue of the unitary (ZX)^(x n); the
    all-ones sector comes first. For even n there are exactly four
    sectors of dimension 2**(n-2) each.
    """
    n = group.n_qubits
    if n % 2:
        raise OddQubitCountError(f"sector decomposition needs even n, got {n}")
    out = []
    for sx in (1, -1):
        for sz in (1, -1):
            dim = round(np.real(np.trace(sector_projector(group, sx, sz))))
            out.append(((1, sx, sx * sz, sz), dim))
    return sorted(out, key=lambda item: item[0], reverse=True)


def sector_projector(group: DecouplingGroup, sx: int, sz: int) -> np.ndarray:
    """Projector onto the joint (X...X = sx, Z...Z = sz) eigenspace."""
    xmat = pauli_to_matrix(group.elements[1])
    zmat = pauli_to_matrix(group.elements[3])
    dim = xmat.shape[0]
    return (np.eye(dim) + sx * xmat) @ (np.eye(dim) + sz * zmat) / 4


@dataclass(frozen=True, eq=False)
class LogicalOperator:
    """A logical Pauli acting on one encoded qubit, in the logical basis."""

    which: str  # "Y" or "Z"
    target: int
    matrix: np.ndarray = field(repr=False)


def logical_pauli(n_logical: int, which: str, j: int) -> np.ndarray:
    """Dense I (x) ... (x) sigma_which (x) ... (x) I on logical slot j (1-indexed)."""
    if not 1 <= j <= n_logical:
        raise LogicalIndexError(f"logical index {j} outside 1..{n_logical}")
    sigma = {"Y": SIGMA_Y, "Z": SIGMA_Z}[which]
    return kron_all(sigma if i == j else SIGMA_I for i in range(1, n_logical + 1))


def logical_operator(basis: LogicalBasis, which: str, j: int) -> LogicalOperator:
    return LogicalOperator(which, j, logical_pauli(basis.n_logical, which, j))


def project_to_logical(u_physical: np.ndarray, basis: LogicalBasis) -> np.ndarray:
    """Matrix M with M[a, b] = <psi_a| u |psi_b> over the logical basis.

    The caller decides what deviation of M†M from the identity (leakage)
    is acceptable; this routine does not judge it.
    """
    u = np.asarray(u_physical, dtype=np.complex128)
    dim = 2**basis.n_physical
    if u.shape != (dim, dim):
        raise DimensionMismatchError(f"expected {dim}x{dim} operator, got {u.shape}")
    return basis.states.conj() @ u @ basis.states.T


def basis_dump(basis: LogicalBasis, atol: float = ATOL_NORM) -> str:
    """One line per state: "label : coeff|bits⟩ + coeff|bits⟩"."""
    lines = []
    width = basis.n_physical
    for label, vec in zip(basis.labels, basis.states):
        parts = [
            f"{vec[idx].real:.12f}|{format(idx, f'0{width}b')}⟩"
            for idx in np.nonzero(np.abs(vec) > atol)[0]
        ]
        lines.append(f"{label} : " + " + ".join(parts))
    return "\n".join(lines)
