from __future__ import annotations

import numpy as np
import pytest

from dfsgates.dfs import (
    basis_dump,
    build_logical_basis,
    dfs_decomposition,
    logical_operator,
    logical_pauli,
    project_to_logical,
    sector_projector,
)
from dfsgates.errors import (
    DimensionMismatchError,
    LogicalIndexError,
    OddQubitCountError,
    TooFewQubitsError,
)
from dfsgates.linalg import SIGMA_I, SIGMA_Y, kron, subspace_projector
from dfsgates.pauli import (
    build_decoupling_group,
    commutant_generators,
    pauli_to_matrix,
)

RSQRT2 = 1 / np.sqrt(2)

# The four n=4 logical states: label -> {computational index: amplitude}
N4_TABLE = {
    "00": {0b0000: RSQRT2, 0b1111: RSQRT2},
    "01": {0b1010: RSQRT2, 0b0101: RSQRT2},
    "10": {0b1100: RSQRT2, 0b0011: RSQRT2},
    "11": {0b0110: RSQRT2, 0b1001: RSQRT2},
}


class TestLogicalBasis:
    def test_n4_exact_amplitudes(self):
        basis = build_logical_basis(4)
        assert basis.labels == ("00", "01", "10", "11")
        for label, entries in N4_TABLE.items():
            vec = basis.state(label)
            expected = np.zeros(16, dtype=complex)
            for idx, amp in entries.items():
                expected[idx] = amp
            assert np.allclose(vec, expected, atol=1e-12)

    def test_states_are_plus_one_eigenvectors(self):
        for n in (4, 6):
            basis = build_logical_basis(n)
            group = build_decoupling_group(n)
            for element in group.elements:
                m = pauli_to_matrix(element)
                assert np.allclose(m @ basis.states.T, basis.states.T, atol=1e-12)

    def test_n6_shape(self):
        basis = build_logical_basis(6)
        assert basis.n_states == 16
        assert np.allclose(basis.states.conj() @ basis.states.T, np.eye(16), atol=1e-12)
        # every state is an equal two-term superposition
        for vec in basis.states:
            support = np.abs(vec) > 1e-12
            assert support.sum() == 2
            assert np.allclose(np.abs(vec[support]), RSQRT2, atol=1e-12)

    def test_encoding_rate(self):
        for n in (4, 6, 8):
            assert build_logical_basis(n).n_logical == n - 2

    def test_preconditions(self):
        with pytest.raises(OddQubitCountError):
            build_logical_basis(5)
        with pytest.raises(TooFewQubitsError):
            build_logical_basis(2)


class TestSectorDecomposition:
    @pytest.mark.parametrize("n", [4, 6])
    def test_four_equal_sectors(self, n):
        group = build_decoupling_group(n)
        sectors = dfs_decomposition(group)
        assert len(sectors) == 4
        assert all(dim == 2 ** (n - 2) for _, dim in sectors)
        assert sum(dim for _, dim in sectors) == 2**n
        assert sectors[0][0] == (1, 1, 1, 1)

    @pytest.mark.parametrize("n", [4, 6])
    def test_lambda_sector_matches_logical_basis(self, n):
        group = build_decoupling_group(n)
        basis = build_logical_basis(n)
        p_sector = sector_projector(group, 1, 1)
        p_basis = subspace_projector(basis.states)
        assert np.allclose(p_sector, p_basis, atol=1e-10)

    def test_commutant_generators_preserve_dfs(self):
        for n in (4, 6):
            basis = build_logical_basis(n)
            p = subspace_projector(basis.states)
            comp = np.eye(2**n) - p
            for gen in commutant_generators(n):
                g = pauli_to_matrix(gen)
                assert np.linalg.norm(comp @ g @ p, 2) <= 1e-12


class TestLogicalOperators:
    def test_z1_diagonal(self):
        op = logical_operator(build_logical_basis(4), "Z", 1)
        assert np.allclose(op.matrix, np.diag([1, 1, -1, -1]))

    def test_y2_form(self):
        op = logical_operator(build_logical_basis(4), "Y", 2)
        assert np.allclose(op.matrix, kron(SIGMA_I, SIGMA_Y))

    def test_anticommutation_same_target(self):
        y = logical_pauli(2, "Y", 1)
        z = logical_pauli(2, "Z", 1)
        assert np.allclose(y @ z + z @ y, np.zeros((4, 4)), atol=1e-12)

    def test_index_out_of_range(self):
        with pytest.raises(LogicalIndexError):
            logical_pauli(2, "Y", 3)


class TestProjectToLogical:
    def test_identity(self):
        basis = build_logical_basis(4)
        assert np.allclose(project_to_logical(np.eye(16), basis), np.eye(4), atol=1e-12)

    def test_global_x_acts_as_identity(self):
        basis = build_logical_basis(4)
        group = build_decoupling_group(4)
        m = project_to_logical(pauli_to_matrix(group.elements[1]), basis)
        assert np.allclose(m, np.eye(4), atol=1e-12)

    def test_leakage_detectable(self):
        # swap one code state with an orthogonal non-code state
        basis = build_logical_basis(4)
        outside = np.zeros(16, dtype=complex)
        outside[1] = 1.0  # |0001> has odd weight, not in the code space
        state = basis.state("00")
        u = np.eye(16, dtype=complex)
        u = u - np.outer(state, state.conj()) - np.outer(outside, outside.conj())
        u = u + np.outer(outside, state.conj()) + np.outer(state, outside.conj())
        m = project_to_logical(u, basis)
        assert np.linalg.norm(m.conj().T @ m - np.eye(4), 2) > 0.5

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            project_to_logical(np.eye(8), build_logical_basis(4))


class TestDump:
    def test_n4_golden_lines(self):
        dump = basis_dump(build_logical_basis(4)).splitlines()
        assert dump[0] == "00 : 0.707106781187|0000⟩ + 0.707106781187|1111⟩"
        assert dump[3] == "11 : 0.707106781187|0110⟩ + 0.707106781187|1001⟩"
        assert len(dump) == 4
